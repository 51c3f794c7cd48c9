"""In-memory pedigree model: persons, couple units, generation assignment.

A family is modeled as a DAG of persons (each with at most one mother and
one father edge) from which "couple units" are derived: every distinct
(father, mother) pair that appears on at least one child becomes a unit,
and every person who never appears as a parent becomes a single-member
unit.  Units form a forest (each unit hangs below exactly one parent
unit), which is what the radial layout walks.

Graphs are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import CycleError, DanglingReference, DuplicatePerson, UnknownPerson


class Sex(Enum):
    MALE = "M"
    FEMALE = "F"
    UNKNOWN = "U"


class VitalStatus(Enum):
    ALIVE = "alive"
    DECEASED = "deceased"
    SUICIDE = "suicide"


@dataclass(frozen=True)
class DiagnosisRecord:
    """One (disease, age at diagnosis) pair attached to a person."""

    disease_index: int
    age_at_diagnosis: int


@dataclass(frozen=True)
class Person:
    person_id: str
    family_id: str
    sex: Sex
    mother_id: str | None
    father_id: str | None
    age_years: int
    vital_status: VitalStatus
    diagnoses: tuple[DiagnosisRecord, ...] = ()

    def diagnosis_indices(self) -> frozenset[int]:
        return frozenset(d.disease_index for d in self.diagnoses)


@dataclass(frozen=True)
class CoupleUnit:
    """A layout node: a parent pair, a single parent, or a lone person.

    Singles (childless persons rendered alone) occupy the slot matching
    their sex (unknown sex falls in the father slot).  ``unit_id`` is the
    sorted member ids joined by "+", so ids are reproducible regardless of
    input row order.
    """

    unit_id: str
    father_id: str | None
    mother_id: str | None
    children: tuple[str, ...]
    generation: int

    @property
    def members(self) -> tuple[str, ...]:
        """Present members, father slot first."""
        return tuple(m for m in (self.father_id, self.mother_id) if m is not None)

    @property
    def is_single(self) -> bool:
        return len(self.members) == 1 and not self.children


@dataclass(frozen=True)
class GraphWarning:
    """A non-fatal data oddity found while building a graph."""

    code: str
    message: str
    subject: str = ""  # person or unit id the warning is about, if any


@dataclass(frozen=True)
class PedigreeGraph:
    """Derived structure of one family.

    ``parent_edges`` maps a child person to the unit formed by its
    parents.  ``unit_children`` is the layout forest: a unit whose two
    members were each born to an in-data unit (a marriage joining two
    lineages) hangs below the deeper parent unit, ties broken by unit id;
    the other parent relation stays in ``parent_edges`` but draws no link.
    """

    family_id: str
    persons: dict[str, Person]
    units: dict[str, CoupleUnit]
    founder_units: tuple[str, ...]
    parent_edges: dict[str, str]
    unit_children: dict[str, tuple[str, ...]]
    person_units: dict[str, tuple[str, ...]]
    warnings: tuple[GraphWarning, ...] = field(default=(), compare=False)

    def generation_of(self, person_id: str) -> int:
        """Generation of the unit the person belongs to as partner/single.

        A person duplicated across units by remarriage takes the deepest
        of their units' generations (consistent with the max-depth rule
        for generation conflicts).
        """
        units = self.person_units.get(person_id)
        if units is None:
            raise UnknownPerson(person_id)
        return max(self.units[u].generation for u in units)

    def members_of_generation(self, g: int) -> list[str]:
        """All person ids whose generation equals ``g``, sorted."""
        return sorted(
            pid for pid in self.persons if self.generation_of(pid) == g
        )

    def suicide_count(self) -> int:
        return sum(
            1 for p in self.persons.values() if p.vital_status is VitalStatus.SUICIDE
        )


def _check_acyclic(persons: dict[str, Person]) -> None:
    # Iterative three-color DFS over child -> parent edges.
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {pid: WHITE for pid in persons}
    for start in persons:
        if color[start] != WHITE:
            continue
        stack: list[tuple[str, bool]] = [(start, False)]
        while stack:
            pid, done = stack.pop()
            if done:
                color[pid] = BLACK
                continue
            if color[pid] == BLACK:
                continue
            if color[pid] == GRAY:
                raise CycleError(f"ancestry cycle through {pid!r}")
            color[pid] = GRAY
            stack.append((pid, True))
            p = persons[pid]
            for parent in (p.father_id, p.mother_id):
                if parent is None:
                    continue
                if color[parent] == GRAY:
                    raise CycleError(f"ancestry cycle through {parent!r}")
                if color[parent] == WHITE:
                    stack.append((parent, False))


def _unit_id(members: tuple[str, ...]) -> str:
    return "+".join(sorted(members))


def build_graph(persons: list[Person]) -> PedigreeGraph:
    """Derive units, the unit forest, and generations for one family.

    Raises DuplicatePerson, DanglingReference, or CycleError on invalid
    input; data oddities that can still be rendered (sex/role mismatch,
    generation conflicts, consanguinity) come back as graph warnings.
    """
    by_id: dict[str, Person] = {}
    for p in persons:
        if p.person_id in by_id:
            raise DuplicatePerson(p.person_id)
        by_id[p.person_id] = p
    if not by_id:
        return PedigreeGraph(
            family_id="",
            persons={},
            units={},
            founder_units=(),
            parent_edges={},
            unit_children={},
            person_units={},
        )

    family_ids = {p.family_id for p in by_id.values()}
    if len(family_ids) != 1:
        raise ValueError(f"expected a single family, got {sorted(family_ids)}")
    family_id = family_ids.pop()

    for p in by_id.values():
        for ref in (p.mother_id, p.father_id):
            if ref is not None and ref not in by_id:
                raise DanglingReference(
                    f"{p.person_id!r} references missing parent {ref!r}"
                )
    _check_acyclic(by_id)

    warnings: list[GraphWarning] = []

    # Couple detection: group children by parent-pair member set, so a pair
    # recorded with swapped roles on different rows still forms one unit.
    pair_children: dict[frozenset[str], list[str]] = {}
    pair_orients: dict[frozenset[str], set[tuple[str | None, str | None]]] = {}
    for pid in sorted(by_id):
        p = by_id[pid]
        if p.mother_id is None and p.father_id is None:
            continue
        members = frozenset(m for m in (p.father_id, p.mother_id) if m is not None)
        pair_children.setdefault(members, []).append(pid)
        pair_orients.setdefault(members, set()).add((p.father_id, p.mother_id))

    def slot_assignment(members: frozenset[str]) -> tuple[str | None, str | None]:
        orients = pair_orients[members]
        if len(orients) == 1:
            return next(iter(orients))
        # Conflicting role records: settle by sex, then by id.
        warnings.append(
            GraphWarning(
                code="ROLE_CONFLICT",
                message=f"parents {_unit_id(tuple(members))} recorded with "
                "inconsistent father/mother roles; roles normalized",
                subject=_unit_id(tuple(members)),
            )
        )
        ordered = sorted(members)
        if len(ordered) == 1:
            only = ordered[0]
            return (only, None) if by_id[only].sex is not Sex.FEMALE else (None, only)
        a, b = ordered
        if by_id[a].sex is Sex.FEMALE and by_id[b].sex is not Sex.FEMALE:
            return b, a
        return a, b

    units: dict[str, CoupleUnit] = {}
    parent_edges: dict[str, str] = {}
    couple_member_ids: set[str] = set()
    for members in pair_children:
        father, mother = slot_assignment(members)
        uid = _unit_id(tuple(members))
        children = tuple(sorted(pair_children[members]))
        units[uid] = CoupleUnit(
            unit_id=uid,
            father_id=father,
            mother_id=mother,
            children=children,
            generation=-1,  # filled in below
        )
        for c in children:
            parent_edges[c] = uid
        couple_member_ids.update(members)
        if father is not None and by_id[father].sex is Sex.FEMALE:
            warnings.append(
                GraphWarning(
                    code="SEX_ROLE_MISMATCH",
                    message=f"{father!r} referenced as father but coded Female",
                    subject=father,
                )
            )
        if mother is not None and by_id[mother].sex is Sex.MALE:
            warnings.append(
                GraphWarning(
                    code="SEX_ROLE_MISMATCH",
                    message=f"{mother!r} referenced as mother but coded Male",
                    subject=mother,
                )
            )

    # Everyone who is not a parent gets a single-member unit.
    for pid in sorted(by_id):
        if pid in couple_member_ids:
            continue
        p = by_id[pid]
        father, mother = (None, pid) if p.sex is Sex.FEMALE else (pid, None)
        uid = _unit_id((pid,))
        if uid in units:  # person id collides with a derived unit id
            raise DuplicatePerson(f"unit id collision on {uid!r}")
        units[uid] = CoupleUnit(
            unit_id=uid, father_id=father, mother_id=mother, children=(), generation=-1
        )

    person_units: dict[str, list[str]] = {pid: [] for pid in by_id}
    for uid in sorted(units):
        for m in units[uid].members:
            person_units[m].append(uid)

    # Unit-level parent sets: unit U hangs below every unit some member of U
    # was born to.  Person-level acyclicity makes this a DAG.
    unit_parents: dict[str, set[str]] = {uid: set() for uid in units}
    for uid, unit in units.items():
        for m in unit.members:
            pu = parent_edges.get(m)
            if pu is not None:
                unit_parents[uid].add(pu)

    # Generations via topological sweep, max depth wins on conflicts.
    generation: dict[str, int] = {}
    indeg = {uid: len(ps) for uid, ps in unit_parents.items()}
    ready = sorted(uid for uid, d in indeg.items() if d == 0)
    unit_child_units: dict[str, set[str]] = {uid: set() for uid in units}
    for uid, ps in unit_parents.items():
        for p in ps:
            unit_child_units[p].add(uid)
    order: list[str] = []
    frontier = list(ready)
    while frontier:
        uid = frontier.pop()
        order.append(uid)
        for child in sorted(unit_child_units[uid]):
            indeg[child] -= 1
            if indeg[child] == 0:
                frontier.append(child)
    if len(order) != len(units):  # unreachable given the person-level check
        raise CycleError("unit relation is cyclic")
    for uid in order:
        parents = unit_parents[uid]
        if not parents:
            generation[uid] = 0
            continue
        depths = {generation[p] + 1 for p in parents}
        generation[uid] = max(depths)
        if len(depths) > 1:
            warnings.append(
                GraphWarning(
                    code="GENERATION_CONFLICT",
                    message=f"unit {uid!r} reachable at depths "
                    f"{sorted(depths)}; using {max(depths)}",
                    subject=uid,
                )
            )

    units = {
        uid: CoupleUnit(
            unit_id=u.unit_id,
            father_id=u.father_id,
            mother_id=u.mother_id,
            children=u.children,
            generation=generation[uid],
        )
        for uid, u in units.items()
    }

    # Layout forest: primary parent = deepest parent unit (ties by id).
    # The anchor person (the member born to that parent) orders siblings.
    attach: dict[str, tuple[str, str]] = {}  # child unit -> (parent unit, anchor)
    founders: list[str] = []
    for uid in sorted(units):
        parents = unit_parents[uid]
        if not parents:
            founders.append(uid)
            continue
        primary = min(parents, key=lambda p: (-units[p].generation, p))
        anchors = sorted(
            m for m in units[uid].members if parent_edges.get(m) == primary
        )
        attach[uid] = (primary, anchors[0])

    unit_children: dict[str, tuple[str, ...]] = {uid: () for uid in units}
    grouped: dict[str, list[tuple[str, str]]] = {}
    for child_uid, (parent_uid, anchor) in attach.items():
        grouped.setdefault(parent_uid, []).append((anchor, child_uid))
    for parent_uid, entries in grouped.items():
        entries.sort()
        unit_children[parent_uid] = tuple(uid for _, uid in entries)

    return PedigreeGraph(
        family_id=family_id,
        persons=by_id,
        units=units,
        founder_units=tuple(sorted(founders)),
        parent_edges=parent_edges,
        unit_children=unit_children,
        person_units={pid: tuple(us) for pid, us in person_units.items()},
        warnings=tuple(sorted(warnings, key=lambda w: (w.code, w.subject, w.message))),
    )


def generation_of(graph: PedigreeGraph, person_id: str) -> int:
    return graph.generation_of(person_id)


def members_of_generation(graph: PedigreeGraph, g: int) -> list[str]:
    return graph.members_of_generation(g)
