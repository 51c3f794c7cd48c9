"""Kinship and pattern queries over pedigree graphs.

All queries are read-only and deterministic; results are sorted so the
same graph always yields the same output.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import PedigreeGraph, VitalStatus
from .errors import UnknownPerson

# Late import keeps this module independent of ingest at import time.
from typing import TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from .ingest import Dataset


class Scope(Enum):
    SUICIDE_VICTIMS = "suicide"
    ALL = "all"


@dataclass(frozen=True)
class LineageChain:
    """A maximal run of direct parent->child links, all suicide victims."""

    persons: tuple[str, ...]  # ancestor first
    shared_diagnoses: frozenset[int]


@dataclass(frozen=True)
class IsolatedBurdenFinding:
    """A heavily diagnosed suicide victim among otherwise-alive generations."""

    person_id: str
    diagnosis_count: int
    generation: int
    peer_alive_fraction: float
    context_alive_fraction: float


def ancestors_inclusive(graph: PedigreeGraph, person_id: str) -> frozenset[str]:
    """Reflexive-transitive closure over mother/father edges."""
    if person_id not in graph.persons:
        raise UnknownPerson(person_id)
    seen = {person_id}
    stack = [person_id]
    while stack:
        p = graph.persons[stack.pop()]
        for parent in (p.mother_id, p.father_id):
            if parent is not None and parent not in seen:
                seen.add(parent)
                stack.append(parent)
    return frozenset(seen)


def lowest_common_ancestors(
    graph: PedigreeGraph, a: str, b: str
) -> frozenset[str]:
    """Common ancestors of a and b none of whose strict descendants are
    also common ancestors.  Pedigrees are two-parent DAGs, so the result
    may hold several persons (e.g. both parents of full siblings) or be
    empty when the two share no ancestry.
    """
    common = ancestors_inclusive(graph, a) & ancestors_inclusive(graph, b)
    if not common:
        return frozenset()
    # The common-ancestor set is closed under taking parents, so a member
    # has a strict descendant in the set iff one of its children is in it.
    children: dict[str, list[str]] = {}
    for p in graph.persons.values():
        for parent in (p.mother_id, p.father_id):
            if parent in common:
                children.setdefault(parent, []).append(p.person_id)
    return frozenset(
        c for c in common if not any(k in common for k in children.get(c, ()))
    )


def suicide_lineages(graph: PedigreeGraph) -> list[LineageChain]:
    """All maximal direct parent->child chains of suicide victims.

    Chain edges are direct parent-child links only; a suicide grandparent
    and grandchild separated by a non-suicide parent do not chain.
    """
    victims = {
        pid
        for pid, p in graph.persons.items()
        if p.vital_status is VitalStatus.SUICIDE
    }
    if not victims:
        return []
    child_edges: dict[str, list[str]] = {v: [] for v in victims}
    has_suicide_parent: set[str] = set()
    for pid in victims:
        p = graph.persons[pid]
        for parent in (p.father_id, p.mother_id):
            if parent in victims:
                child_edges[parent].append(pid)
                has_suicide_parent.add(pid)
    for kids in child_edges.values():
        kids.sort()

    chains: list[tuple[str, ...]] = []

    def extend(path: list[str]) -> None:
        kids = child_edges[path[-1]]
        if not kids:
            if len(path) >= 2:
                chains.append(tuple(path))
            return
        for kid in kids:
            path.append(kid)
            extend(path)
            path.pop()

    for start in sorted(victims - has_suicide_parent):
        extend([start])

    out = []
    for persons in sorted(chains):
        shared = graph.persons[persons[0]].diagnosis_indices()
        for pid in persons[1:]:
            shared &= graph.persons[pid].diagnosis_indices()
        out.append(LineageChain(persons=persons, shared_diagnoses=frozenset(shared)))
    return out


def diagnosis_cooccurrence(ds: "Dataset", among: Scope) -> list[list[int]]:
    """D x D symmetric matrix: off-diagonal (i, j) counts persons in scope
    diagnosed with both i and j; the diagonal counts per-disease totals.
    """
    d = len(ds.disease_names)
    matrix = [[0] * d for _ in range(d)]
    for graph in ds.families.values():
        for p in graph.persons.values():
            if among is Scope.SUICIDE_VICTIMS and p.vital_status is not VitalStatus.SUICIDE:
                continue
            idxs = sorted(p.diagnosis_indices())
            for i in idxs:
                matrix[i][i] += 1
            for ai, i in enumerate(idxs):
                for j in idxs[ai + 1 :]:
                    matrix[i][j] += 1
                    matrix[j][i] += 1
    return matrix


def _alive_fraction(graph: PedigreeGraph, person_ids: list[str]) -> float:
    # Empty denominator reads as vacuously "all alive".
    if not person_ids:
        return 1.0
    alive = sum(
        1
        for pid in person_ids
        if graph.persons[pid].vital_status is VitalStatus.ALIVE
    )
    return alive / len(person_ids)


def isolated_burden(
    graph: PedigreeGraph, min_diagnoses: int = 5
) -> list[IsolatedBurdenFinding]:
    """Suicide victims carrying at least ``min_diagnoses`` distinct
    diagnoses, scored against how alive their generation and the two
    preceding ones are.  Missing generations drop out of the denominator.
    """
    if min_diagnoses < 1:
        raise ValueError("min_diagnoses must be >= 1")
    findings = []
    for pid in sorted(graph.persons):
        p = graph.persons[pid]
        if p.vital_status is not VitalStatus.SUICIDE:
            continue
        count = len(p.diagnoses)
        if count < min_diagnoses:
            continue
        g = graph.generation_of(pid)
        peers = [q for q in graph.members_of_generation(g) if q != pid]
        context = []
        for back in (1, 2):
            if g - back >= 0:
                context.extend(graph.members_of_generation(g - back))
        findings.append(
            IsolatedBurdenFinding(
                person_id=pid,
                diagnosis_count=count,
                generation=g,
                peer_alive_fraction=_alive_fraction(graph, peers),
                context_alive_fraction=_alive_fraction(graph, context),
            )
        )
    findings.sort(key=lambda f: (-f.diagnosis_count, f.person_id))
    return findings
