"""Random-input generators and independent brute-force oracles.

Everything here is deliberately written from the problem definition, not
from the library internals, so the oracles stay meaningful: ancestor sets
are materialized by naive recursion, LCA by descendant scans, and
co-occurrence by direct pair counting.
"""

from __future__ import annotations

import random

from pedvis.core import DiagnosisRecord, Person, Sex, VitalStatus

VITALS = (VitalStatus.ALIVE, VitalStatus.DECEASED, VitalStatus.SUICIDE)


# --- random pedigrees (two-parent DAGs) ---------------------------------


def random_pedigree(
    rng: random.Random, max_persons: int = 200, family_id: str = "FAM"
) -> list[Person]:
    """A valid single-family pedigree: both-parents-or-none, acyclic by
    construction (parents are always earlier persons)."""
    n = rng.randint(2, max_persons)
    persons: list[Person] = []
    males: list[str] = []
    females: list[str] = []
    for i in range(n):
        pid = f"p{i}"
        sex = Sex.MALE if rng.random() < 0.5 else Sex.FEMALE
        mother = father = None
        if males and females and rng.random() < 0.75:
            father = rng.choice(males)
            mother = rng.choice(females)
        age = rng.randint(0, 99)
        diagnoses = tuple(
            DiagnosisRecord(disease_index=d, age_at_diagnosis=rng.randint(0, age))
            for d in sorted(rng.sample(range(16), rng.randint(0, 3)))
        )
        persons.append(
            Person(
                person_id=pid,
                family_id=family_id,
                sex=sex,
                mother_id=mother,
                father_id=father,
                age_years=age,
                vital_status=rng.choice(VITALS),
                diagnoses=diagnoses,
            )
        )
        (males if sex is Sex.MALE else females).append(pid)
    return persons


# --- random clean unit trees (for layout invariants) ---------------------


def random_family_tree(
    rng: random.Random,
    max_depth: int = 10,
    max_branching: int = 5,
    family_id: str = "TREE",
    max_persons: int = 240,
) -> list[Person]:
    """A clean couple-unit tree: one founder couple; every child either
    marries a fresh spouse and has children or remains single.  Growth
    stops at ``max_persons`` so deep/wide parameters stay tractable."""
    persons: list[Person] = []
    counter = [0]

    def new_id() -> str:
        counter[0] += 1
        return f"t{counter[0]}"

    def add(pid: str, sex: Sex, mother: str | None, father: str | None) -> None:
        persons.append(
            Person(
                person_id=pid,
                family_id=family_id,
                sex=sex,
                mother_id=mother,
                father_id=father,
                age_years=rng.randint(0, 99),
                vital_status=rng.choice(VITALS),
                diagnoses=(),
            )
        )

    def grow(father: str, mother: str, depth: int) -> None:
        if depth >= max_depth:
            return
        for _ in range(rng.randint(0, max_branching)):
            if counter[0] >= max_persons:
                return
            child = new_id()
            child_sex = Sex.MALE if rng.random() < 0.5 else Sex.FEMALE
            add(child, child_sex, mother, father)
            if depth + 1 < max_depth and rng.random() < 0.45:
                spouse = new_id()
                spouse_sex = Sex.FEMALE if child_sex is Sex.MALE else Sex.MALE
                add(spouse, spouse_sex, None, None)
                if child_sex is Sex.MALE:
                    grow(child, spouse, depth + 1)
                else:
                    grow(spouse, child, depth + 1)

    f, m = new_id(), new_id()
    add(f, Sex.MALE, None, None)
    add(m, Sex.FEMALE, None, None)
    grow(f, m, 0)
    return persons


# --- random multi-family datasets (for ingest round-trips) ---------------


def random_dataset_text(rng: random.Random) -> str:
    """A valid CSV: 1-4 families, 1-20 disease columns, shuffled rows."""
    disease_count = rng.randint(1, 20)
    header = "PersonID,FamilyID,Sex,MotherID,FatherID,Age,VitalStatus," + ",".join(
        f"Dx{i}" for i in range(disease_count)
    )
    rows: list[str] = []
    for fam_no in range(rng.randint(1, 4)):
        fam = f"f{fam_no}"
        for p in random_pedigree(rng, max_persons=30, family_id=fam):
            cells = [
                f"{fam}-{p.person_id}",
                fam,
                p.sex.value,
                f"{fam}-{p.mother_id}" if p.mother_id else "",
                f"{fam}-{p.father_id}" if p.father_id else "",
                str(p.age_years),
                p.vital_status.value,
            ]
            by_index = {
                d.disease_index: d.age_at_diagnosis
                for d in p.diagnoses
                if d.disease_index < disease_count
            }
            cells.extend(
                str(by_index[i]) if i in by_index else ""
                for i in range(disease_count)
            )
            rows.append(",".join(cells))
    rng.shuffle(rows)
    return header + "\n" + "\n".join(rows) + "\n"


# --- brute-force oracles --------------------------------------------------


def oracle_ancestor_sets(persons: dict[str, Person]) -> dict[str, set[str]]:
    """Reflexive-transitive parent closures by fixpoint iteration: keep
    recomputing anc(p) = {p} ∪ anc(mother) ∪ anc(father) until stable."""
    anc = {pid: {pid} for pid in persons}
    changed = True
    while changed:
        changed = False
        for pid, p in persons.items():
            updated = {pid}
            for parent in (p.mother_id, p.father_id):
                if parent is not None:
                    updated |= anc[parent]
            if updated != anc[pid]:
                anc[pid] = updated
                changed = True
    return anc


def oracle_lca_given(anc: dict[str, set[str]], a: str, b: str) -> set[str]:
    """Common ancestors filtered by a descendant scan: drop every common
    ancestor that is a strict ancestor of another common ancestor."""
    common = anc[a] & anc[b]
    return {
        c
        for c in common
        if not any(d != c and c in anc[d] for d in common)
    }


def oracle_lca(persons: dict[str, Person], a: str, b: str) -> set[str]:
    return oracle_lca_given(oracle_ancestor_sets(persons), a, b)


def oracle_cooccurrence(
    person_lists: list[list[Person]], disease_count: int, suicide_only: bool
) -> list[list[int]]:
    matrix = [[0] * disease_count for _ in range(disease_count)]
    for persons in person_lists:
        for p in persons:
            if suicide_only and p.vital_status is not VitalStatus.SUICIDE:
                continue
            indices = sorted({d.disease_index for d in p.diagnoses})
            for i in indices:
                for j in indices:
                    matrix[i][j] += 1
    return matrix


def oracle_leaf_count(children: dict[str, tuple[str, ...]], uid: str) -> int:
    kids = children.get(uid, ())
    if not kids:
        return 1
    return sum(oracle_leaf_count(children, k) for k in kids)
