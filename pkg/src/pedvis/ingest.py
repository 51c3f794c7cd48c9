"""Canonical CSV schema: parsing, validation and serialization.

Input files are UTF-8 CSV with the fixed header
``PersonID,FamilyID,Sex,MotherID,FatherID,Age,VitalStatus`` followed by
one column per disease; a disease cell is blank (not diagnosed) or the
integer age at diagnosis.  Fields are never quoted: ids are restricted to
``[A-Za-z0-9_-]`` (``+`` is reserved for derived unit ids) and disease
names may not contain commas or quotes, so a plain comma split is the
whole grammar.  LF and CRLF are both accepted; output is always LF.

Row-level problems are collected per row without aborting the parse;
``parse_dataset`` returns a Dataset only when no error was found,
otherwise the full ValidationReport.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import (
    DiagnosisRecord,
    PedigreeGraph,
    Person,
    Sex,
    VitalStatus,
    build_graph,
)
from .errors import SchemaError

FIXED_COLUMNS = (
    "PersonID",
    "FamilyID",
    "Sex",
    "MotherID",
    "FatherID",
    "Age",
    "VitalStatus",
)
EXPECTED_DISEASE_COUNT = 16

_ID_RE = re.compile(r"[A-Za-z0-9_-]+\Z")
_INT_RE = re.compile(r"[0-9]+\Z")
_BAD_NAME_CHARS = re.compile(r'[",\r\n]')

_SEX = {"M": Sex.MALE, "F": Sex.FEMALE, "U": Sex.UNKNOWN}
_VITAL = {v.value: v for v in VitalStatus}


@dataclass(frozen=True)
class Issue:
    """One validation finding.  ``row`` is the physical line number
    (header = 1); 0 marks file- or family-level findings."""

    row: int
    code: str
    message: str

    def to_json(self) -> dict:
        return {"row": self.row, "code": self.code, "message": self.message}


@dataclass
class ValidationReport:
    errors: list[Issue] = field(default_factory=list)
    warnings: list[Issue] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_json(self) -> dict:
        return {
            "errors": [i.to_json() for i in self.errors],
            "warnings": [i.to_json() for i in self.warnings],
            "counts": dict(self.counts),
        }


@dataclass
class Dataset:
    families: dict[str, PedigreeGraph]
    disease_names: tuple[str, ...]
    warnings: list[Issue] = field(default_factory=list)

    @property
    def disease_count(self) -> int:
        return len(self.disease_names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return (
            self.families == other.families
            and self.disease_names == other.disease_names
            and self.warnings == other.warnings
        )


def _parse_header(line: str) -> tuple[str, ...]:
    cols = line.split(",")
    if tuple(cols[: len(FIXED_COLUMNS)]) != FIXED_COLUMNS:
        raise SchemaError(
            "header must start with " + ",".join(FIXED_COLUMNS)
        )
    diseases = tuple(cols[len(FIXED_COLUMNS) :])
    if not diseases:
        raise SchemaError("at least one disease column is required")
    seen = set()
    for name in diseases:
        if not name:
            raise SchemaError("empty disease column name")
        if _BAD_NAME_CHARS.search(name):
            raise SchemaError(f"illegal character in disease name {name!r}")
        if name in seen:
            raise SchemaError(f"duplicate disease column {name!r}")
        seen.add(name)
    return diseases


def _parse_row(
    lineno: int,
    fields: list[str],
    disease_count: int,
    errors: list[Issue],
) -> Person | None:
    def err(code: str, message: str) -> None:
        errors.append(Issue(row=lineno, code=code, message=message))

    expected = len(FIXED_COLUMNS) + disease_count
    if len(fields) != expected:
        err("BAD_SHAPE", f"expected {expected} fields, got {len(fields)}")
        return None
    person_id, family_id, sex_s, mother_s, father_s, age_s, vital_s = fields[:7]

    ok = True
    for label, value in (("PersonID", person_id), ("FamilyID", family_id)):
        if not _ID_RE.match(value):
            err("BAD_ID", f"{label} {value!r} not in [A-Za-z0-9_-]+")
            ok = False
    for label, value in (("MotherID", mother_s), ("FatherID", father_s)):
        if value and not _ID_RE.match(value):
            err("BAD_ID", f"{label} {value!r} not in [A-Za-z0-9_-]+")
            ok = False
    sex = _SEX.get(sex_s)
    if sex is None:
        err("BAD_ENUM", f"Sex {sex_s!r} not one of M/F/U")
        ok = False
    vital = _VITAL.get(vital_s)
    if vital is None:
        err("BAD_ENUM", f"VitalStatus {vital_s!r} not one of alive/deceased/suicide")
        ok = False
    age_ok = bool(_INT_RE.match(age_s))
    if age_ok:
        age = int(age_s)
    else:
        err("BAD_AGE", f"Age {age_s!r} is not a non-negative integer")
        ok = False
        age = 0

    diagnoses: list[DiagnosisRecord] = []
    for i, cell in enumerate(fields[7:]):
        if cell == "":
            continue
        if not _INT_RE.match(cell):
            err("BAD_DIAGNOSIS", f"disease column {i}: {cell!r} is not a non-negative integer")
            ok = False
            continue
        dx_age = int(cell)
        if age_ok and dx_age > age:
            err(
                "DIAGNOSIS_EXCEEDS_AGE",
                f"disease column {i}: diagnosis age {dx_age} exceeds age {age}",
            )
            ok = False
            continue
        diagnoses.append(DiagnosisRecord(disease_index=i, age_at_diagnosis=dx_age))

    if not ok:
        return None
    return Person(
        person_id=person_id,
        family_id=family_id,
        sex=sex,
        mother_id=mother_s or None,
        father_id=father_s or None,
        age_years=age,
        vital_status=vital,
        diagnoses=tuple(diagnoses),
    )


def _kahn_residual(
    nodes: set[str], edges: dict[str, tuple[str, ...]]
) -> set[str]:
    """Nodes Kahn's algorithm cannot peel: cycle members plus everything
    downstream of them (following ``edges`` as prerequisites)."""
    out: dict[str, list[str]] = {n: [] for n in nodes}
    pending = {}
    for n, deps in edges.items():
        pending[n] = len(deps)
        for d in deps:
            out[d].append(n)
    queue = [n for n, c in pending.items() if c == 0]
    while queue:
        n = queue.pop()
        for m in out[n]:
            pending[m] -= 1
            if pending[m] == 0:
                queue.append(m)
    return {n for n, c in pending.items() if c > 0}


def _find_cycle_rows(
    persons: dict[str, Person], rows: dict[str, int]
) -> list[str]:
    """Person ids lying on an ancestry cycle, sorted by input row.

    Peeling child->parent leaves cycles plus their descendants; peeling
    parent->child leaves cycles plus their ancestors.  The intersection
    is exactly the cycle members.
    """
    ids = set(persons)
    parents = {
        pid: tuple(
            q for q in (p.mother_id, p.father_id) if q is not None and q in ids
        )
        for pid, p in persons.items()
    }
    residual = _kahn_residual(ids, parents)
    if not residual:
        return []
    children: dict[str, list[str]] = {pid: [] for pid in persons}
    for pid, ps in parents.items():
        for q in ps:
            children[q].append(pid)
    reverse = _kahn_residual(ids, {pid: tuple(children[pid]) for pid in persons})
    return sorted(residual & reverse, key=lambda pid: rows[pid])


def load_dataset(text: str) -> tuple[Dataset | None, ValidationReport]:
    """Parse and validate; always returns a full report, plus the Dataset
    when no errors were found."""
    report = ValidationReport()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln.rstrip("\r") for ln in lines]
    if not lines or not lines[0]:
        raise SchemaError("empty input: header line required")
    diseases = _parse_header(lines[0])
    if len(diseases) != EXPECTED_DISEASE_COUNT:
        report.warnings.append(
            Issue(
                row=1,
                code="DISEASE_COUNT",
                message=f"expected {EXPECTED_DISEASE_COUNT} disease columns, "
                f"got {len(diseases)}",
            )
        )

    persons_by_family: dict[str, dict[str, Person]] = {}
    row_of: dict[str, int] = {}
    seen_ids: set[str] = set()
    data_rows = 0
    for lineno, line in enumerate(lines[1:], start=2):
        if line == "":
            continue
        data_rows += 1
        person = _parse_row(lineno, line.split(","), len(diseases), report.errors)
        if person is None:
            continue
        if person.person_id in seen_ids:
            report.errors.append(
                Issue(
                    row=lineno,
                    code="DUPLICATE_PERSON",
                    message=f"person id {person.person_id!r} already defined",
                )
            )
            continue
        seen_ids.add(person.person_id)
        row_of[person.person_id] = lineno
        persons_by_family.setdefault(person.family_id, {})[person.person_id] = person

    if data_rows == 0:
        report.warnings.append(Issue(row=0, code="NO_DATA", message="no data rows"))

    families: dict[str, PedigreeGraph] = {}
    person_count = 0
    diagnosis_count = 0
    for family_id in sorted(persons_by_family):
        members = persons_by_family[family_id]
        clean = True
        for pid in sorted(members, key=lambda p: row_of[p]):
            p = members[pid]
            for label, ref in (("mother", p.mother_id), ("father", p.father_id)):
                if ref is not None and ref not in members:
                    where = "in another family" if ref in seen_ids else "anywhere"
                    report.errors.append(
                        Issue(
                            row=row_of[pid],
                            code="DANGLING_PARENT",
                            message=f"{label} {ref!r} of {pid!r} not found {where} "
                            f"in family {family_id!r}",
                        )
                    )
                    clean = False
        if clean:
            for pid in _find_cycle_rows(members, row_of):
                report.errors.append(
                    Issue(
                        row=row_of[pid],
                        code="CYCLE",
                        message=f"{pid!r} is their own ancestor",
                    )
                )
                clean = False
        if not clean:
            continue
        graph = build_graph(list(members.values()))
        families[family_id] = graph
        person_count += len(members)
        diagnosis_count += sum(len(p.diagnoses) for p in members.values())
        for w in graph.warnings:
            report.warnings.append(
                Issue(row=0, code=w.code, message=f"family {family_id!r}: {w.message}")
            )

    report.warnings.sort(key=lambda i: (i.row, i.code, i.message))
    report.errors.sort(key=lambda i: (i.row, i.code, i.message))
    report.counts = {
        "persons": person_count,
        "families": len(families),
        "diagnoses": diagnosis_count,
    }
    if not report.ok:
        return None, report
    ds = Dataset(
        families=families,
        disease_names=diseases,
        warnings=list(report.warnings),
    )
    return ds, report


def parse_dataset(text: str) -> Dataset | ValidationReport:
    ds, report = load_dataset(text)
    return ds if ds is not None else report


def serialize_dataset(ds: Dataset) -> str:
    """Emit the canonical CSV; rows ordered by (family_id, person_id).

    ``parse_dataset(serialize_dataset(ds))`` reproduces ``ds`` exactly.
    """
    out = [",".join(FIXED_COLUMNS + ds.disease_names)]
    for family_id in sorted(ds.families):
        graph = ds.families[family_id]
        for pid in sorted(graph.persons):
            p = graph.persons[pid]
            by_index = {d.disease_index: d.age_at_diagnosis for d in p.diagnoses}
            cells = [
                p.person_id,
                p.family_id,
                p.sex.value,
                p.mother_id or "",
                p.father_id or "",
                str(p.age_years),
                p.vital_status.value,
            ]
            cells.extend(
                str(by_index[i]) if i in by_index else ""
                for i in range(ds.disease_count)
            )
            out.append(",".join(cells))
    return "\n".join(out) + "\n"
