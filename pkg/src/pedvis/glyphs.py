"""Per-person visual-encoding geometry.

Shape follows the role a person plays in their unit (father slot renders a
square, mother slot a circle) so dirty sex data still renders predictably.
Age maps linearly onto the shaded-area fraction with a cap at 100 years,
and the shaded area is drawn as a concentric inner shape scaled by the
square root of the fraction, which makes the *area* ratio equal the
fraction for squares and circles alike.

Suicide victims with at least one diagnosis additionally carry a radial
chart of D equal sectors (sector i spans [i*360/D, (i+1)*360/D) degrees,
counterclockwise from east), filled exactly where diagnosed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from .core import DiagnosisRecord, Person, Sex, VitalStatus
from .errors import DomainError, IndexOutOfRange

if TYPE_CHECKING:  # pragma: no cover
    from .ingest import Dataset

AGE_FILL_CAP_YEARS = 100


class Shape(Enum):
    SQUARE = "square"
    CIRCLE = "circle"


class Role(Enum):
    FATHER = "father"
    MOTHER = "mother"
    SINGLE = "single"


@dataclass(frozen=True)
class SectorSpec:
    disease_index: int
    angle_start: float  # degrees
    angle_end: float
    filled: bool

    @property
    def color_key(self) -> int:
        return self.disease_index


@dataclass(frozen=True)
class GlyphDescriptor:
    person_id: str
    shape: Shape
    status_color_key: VitalStatus
    fill_fraction: float
    radial_chart: tuple[SectorSpec, ...] | None


@dataclass(frozen=True)
class DotPlotDot:
    person_id: str
    family_id: str
    age_at_diagnosis: int


@dataclass(frozen=True)
class DotPlotSeries:
    disease_index: int
    disease_name: str
    dots: tuple[DotPlotDot, ...]


def sectors_for(
    diagnoses: list[DiagnosisRecord] | tuple[DiagnosisRecord, ...],
    disease_count: int,
) -> tuple[SectorSpec, ...]:
    """All ``disease_count`` sectors in index order, filled where diagnosed.

    Boundaries are computed as (i * 360) / D so adjacent sectors share the
    exact same float and the union tiles [0, 360) with no gap or overlap.
    """
    if disease_count < 1:
        raise DomainError(f"disease_count must be >= 1, got {disease_count}")
    diagnosed = set()
    for rec in diagnoses:
        if not 0 <= rec.disease_index < disease_count:
            raise IndexOutOfRange(
                f"disease index {rec.disease_index} outside [0, {disease_count})"
            )
        diagnosed.add(rec.disease_index)
    return tuple(
        SectorSpec(
            disease_index=i,
            angle_start=(i * 360.0) / disease_count,
            angle_end=((i + 1) * 360.0) / disease_count,
            filled=i in diagnosed,
        )
        for i in range(disease_count)
    )


def age_fill_fraction(age_years: int) -> float:
    return min(age_years / AGE_FILL_CAP_YEARS, 1.0)


def inner_fill_geometry(shape: Shape, fill_fraction: float) -> float:
    """Linear scale of the concentric inner shape whose area fraction
    equals ``fill_fraction``; sqrt(f) works for both squares and circles.
    """
    if not 0.0 <= fill_fraction <= 1.0:
        raise DomainError(f"fill fraction {fill_fraction} outside [0, 1]")
    return math.sqrt(fill_fraction)


def glyph_for(person: Person, role: Role, disease_count: int) -> GlyphDescriptor:
    if role is Role.FATHER:
        shape = Shape.SQUARE
    elif role is Role.MOTHER:
        shape = Shape.CIRCLE
    else:
        shape = Shape.CIRCLE if person.sex is Sex.FEMALE else Shape.SQUARE
    chart = None
    if person.vital_status is VitalStatus.SUICIDE and person.diagnoses:
        chart = sectors_for(person.diagnoses, disease_count)
    return GlyphDescriptor(
        person_id=person.person_id,
        shape=shape,
        status_color_key=person.vital_status,
        fill_fraction=age_fill_fraction(person.age_years),
        radial_chart=chart,
    )


def build_dotplots(ds: "Dataset") -> list[DotPlotSeries]:
    """One series per disease, dataset-wide, dots sorted by
    (age at diagnosis, person id)."""
    buckets: dict[int, list[DotPlotDot]] = {
        i: [] for i in range(len(ds.disease_names))
    }
    for family_id in sorted(ds.families):
        graph = ds.families[family_id]
        for p in graph.persons.values():
            for rec in p.diagnoses:
                buckets[rec.disease_index].append(
                    DotPlotDot(
                        person_id=p.person_id,
                        family_id=family_id,
                        age_at_diagnosis=rec.age_at_diagnosis,
                    )
                )
    series = []
    for i, name in enumerate(ds.disease_names):
        dots = sorted(
            buckets[i], key=lambda d: (d.age_at_diagnosis, d.person_id, d.family_id)
        )
        series.append(
            DotPlotSeries(disease_index=i, disease_name=name, dots=tuple(dots))
        )
    return series
