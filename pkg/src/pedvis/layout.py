"""Deterministic radial layout of one family's unit forest.

Each generation lives on its own ring (radius = center_radius +
ring * ring_spacing).  Angular space is divided recursively: a unit's
span is split among its child units proportionally to each child
subtree's leaf-unit count, in child order, so dense branches get room
instead of collapsing.  Every unit sits at the midpoint of its span.

With a single founder unit that unit is the root at the center and owns
the whole circle.  With several founder units an invisible virtual root
occupies the center and the founders share the first ring, which shifts
every unit's ring index one past its graph generation.

Angles follow the JSON contract: radians, y-axis up, measured
counterclockwise from the positive x-axis.  A clockwise direction
allocates children from the far end of the parent span backwards; a
nonzero start_angle rotates the root span, in which case span endpoints
are kept unwrapped (monotone) and only ``theta`` is reduced mod 2*pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .core import PedigreeGraph
from .errors import ConfigError, UnknownUnit
from .glyphs import GlyphDescriptor, Role, Shape, glyph_for
from . import jsonio

TWO_PI = 2.0 * math.pi


class Direction(Enum):
    COUNTERCLOCKWISE = "ccw"
    CLOCKWISE = "cw"


@dataclass(frozen=True)
class LayoutConfig:
    ring_spacing: float = 80.0
    center_radius: float = 0.0
    glyph_size: float = 12.0
    partner_offset: float = 8.0
    start_angle: float = 0.0
    direction: Direction = Direction.COUNTERCLOCKWISE

    def validate(self) -> None:
        if self.ring_spacing <= 0 or self.glyph_size <= 0 or self.partner_offset <= 0:
            raise ConfigError("ring_spacing, glyph_size and partner_offset must be positive")
        if self.center_radius < 0:
            raise ConfigError("center_radius must be non-negative")
        if self.ring_spacing <= 2 * self.glyph_size:
            raise ConfigError(
                f"ring_spacing {self.ring_spacing} must exceed twice the "
                f"glyph_size {self.glyph_size}"
            )

    def cache_key(self) -> str:
        return jsonio.dumps(config_to_json(self))


@dataclass(frozen=True)
class PlacedGlyph:
    person_id: str
    shape: Shape
    x: float
    y: float
    descriptor: GlyphDescriptor


@dataclass(frozen=True)
class PlacedUnit:
    unit_id: str
    generation: int  # ring index; graph generation, +1 under a virtual root
    theta: float
    span: tuple[float, float]
    radius: float
    glyphs: tuple[PlacedGlyph, ...]


@dataclass(frozen=True)
class RadialLayout:
    family_id: str
    config: LayoutConfig
    nodes: tuple[PlacedUnit, ...]
    links: tuple[tuple[str, str], ...]
    max_generation: int
    bounds: float
    warnings: tuple[str, ...] = field(default=())


def leaf_count(graph: PedigreeGraph, unit_id: str) -> int:
    """Descendant units (including self) with no child units."""
    if unit_id not in graph.units:
        raise UnknownUnit(unit_id)
    total = 0
    stack = [unit_id]
    while stack:
        uid = stack.pop()
        kids = graph.unit_children.get(uid, ())
        if kids:
            stack.extend(kids)
        else:
            total += 1
    return total


def _leaf_counts(graph: PedigreeGraph) -> dict[str, int]:
    counts: dict[str, int] = {}
    stack: list[tuple[str, bool]] = [(uid, False) for uid in graph.founder_units]
    while stack:
        uid, done = stack.pop()
        kids = graph.unit_children.get(uid, ())
        if done:
            counts[uid] = sum(counts[k] for k in kids)
            continue
        if not kids:
            counts[uid] = 1
            continue
        stack.append((uid, True))
        stack.extend((k, False) for k in kids)
    return counts


def _split_span(
    span: tuple[float, float],
    weights: list[int],
    direction: Direction,
) -> list[tuple[float, float]]:
    """Partition ``span`` into contiguous sub-spans proportional to
    ``weights``.  Shared boundaries are computed once (identical floats),
    and the outermost boundaries reuse the parent's endpoints exactly, so
    the pieces tile the parent with zero float gap.
    """
    a, b = span
    total = sum(weights)
    width = b - a
    n = len(weights)
    if direction is Direction.CLOCKWISE:
        # First child takes the far end of the parent span.
        cuts = [b]
        acc = 0
        for w in weights[:-1]:
            acc += w
            cuts.append(b - width * (acc / total))
        cuts.append(a)
        return [(cuts[i + 1], cuts[i]) for i in range(n)]
    cuts = [a]
    acc = 0
    for w in weights[:-1]:
        acc += w
        cuts.append(a + width * (acc / total))
    cuts.append(b)
    return [(cuts[i], cuts[i + 1]) for i in range(n)]


def _unit_role(unit, person_id: str) -> Role:
    if unit.is_single:
        return Role.SINGLE
    return Role.FATHER if person_id == unit.father_id else Role.MOTHER


def compute_layout(
    graph: PedigreeGraph,
    cfg: LayoutConfig | None = None,
    disease_count: int = 16,
) -> RadialLayout:
    cfg = cfg or LayoutConfig()
    cfg.validate()

    founders = graph.founder_units
    if not founders:
        return RadialLayout(
            family_id=graph.family_id,
            config=cfg,
            nodes=(),
            links=(),
            max_generation=0,
            bounds=cfg.center_radius + cfg.partner_offset + cfg.glyph_size,
        )

    counts = _leaf_counts(graph)
    ring_offset = 0 if len(founders) == 1 else 1
    root_span = (cfg.start_angle, cfg.start_angle + TWO_PI)

    spans: dict[str, tuple[float, float]] = {}
    if len(founders) == 1:
        spans[founders[0]] = root_span
        pending = [founders[0]]
    else:
        weights = [counts[f] for f in founders]
        for f, s in zip(founders, _split_span(root_span, weights, cfg.direction)):
            spans[f] = s
        pending = list(founders)

    order: list[str] = []
    while pending:
        uid = pending.pop()
        order.append(uid)
        kids = graph.unit_children.get(uid, ())
        if not kids:
            continue
        weights = [counts[k] for k in kids]
        for k, s in zip(kids, _split_span(spans[uid], weights, cfg.direction)):
            spans[k] = s
        pending.extend(kids)

    nodes: list[PlacedUnit] = []
    max_ring = 0
    for uid in sorted(order):
        unit = graph.units[uid]
        ring = unit.generation + ring_offset
        max_ring = max(max_ring, ring)
        radius = cfg.center_radius + ring * cfg.ring_spacing
        lo, hi = spans[uid]
        theta = ((lo + hi) / 2.0) % TWO_PI
        ux = radius * math.cos(theta)
        uy = radius * math.sin(theta)
        tangent = (-math.sin(theta), math.cos(theta))
        glyphs = []
        members = unit.members
        for pid in members:
            role = _unit_role(unit, pid)
            desc = glyph_for(graph.persons[pid], role, disease_count)
            if len(members) == 2:
                sign = -1.0 if role is Role.FATHER else 1.0
                gx = ux + sign * cfg.partner_offset * tangent[0]
                gy = uy + sign * cfg.partner_offset * tangent[1]
            else:
                gx, gy = ux, uy
            glyphs.append(
                PlacedGlyph(person_id=pid, shape=desc.shape, x=gx, y=gy, descriptor=desc)
            )
        nodes.append(
            PlacedUnit(
                unit_id=uid,
                generation=ring,
                theta=theta,
                span=(lo, hi),
                radius=radius,
                glyphs=tuple(glyphs),
            )
        )

    links = []
    for parent_uid in sorted(graph.unit_children):
        for child_uid in graph.unit_children[parent_uid]:
            links.append((parent_uid, child_uid))
    links.sort()

    warnings = _crowding_warnings(nodes, cfg)
    bounds = (
        cfg.center_radius
        + max_ring * cfg.ring_spacing
        + cfg.partner_offset
        + cfg.glyph_size
    )
    return RadialLayout(
        family_id=graph.family_id,
        config=cfg,
        nodes=tuple(nodes),
        links=tuple(links),
        max_generation=max_ring,
        bounds=bounds,
        warnings=tuple(warnings),
    )


def glyph_arc_width(unit_glyph_count: int, radius: float, cfg: LayoutConfig) -> float:
    """Angular width (radians) a unit's glyphs occupy on its ring."""
    if unit_glyph_count >= 2:
        tangential = 2 * cfg.partner_offset + cfg.glyph_size
    else:
        tangential = cfg.glyph_size
    return tangential / radius if radius > 0 else 0.0


def _crowding_warnings(nodes: list[PlacedUnit], cfg: LayoutConfig) -> list[str]:
    # Overlaps are reported, never silently drawn over.
    by_ring: dict[int, list[PlacedUnit]] = {}
    for n in nodes:
        by_ring.setdefault(n.generation, []).append(n)
    warnings = []
    for ring in sorted(by_ring):
        units = sorted(by_ring[ring], key=lambda n: (n.theta, n.unit_id))
        if len(units) < 2:
            continue
        for i, u in enumerate(units):
            v = units[(i + 1) % len(units)]
            gap = v.theta - u.theta
            if gap <= 0:
                gap += TWO_PI
            half_u = glyph_arc_width(len(u.glyphs), u.radius, cfg) / 2
            half_v = glyph_arc_width(len(v.glyphs), v.radius, cfg) / 2
            if gap - half_u - half_v < -1e-12:
                warnings.append(
                    f"glyph overlap on ring {ring} between units "
                    f"{u.unit_id!r} and {v.unit_id!r}"
                )
    return warnings


def config_to_json(cfg: LayoutConfig) -> dict:
    return {
        "ring_spacing": cfg.ring_spacing,
        "center_radius": cfg.center_radius,
        "glyph_size": cfg.glyph_size,
        "partner_offset": cfg.partner_offset,
        "start_angle": cfg.start_angle,
        "direction": cfg.direction.value,
    }


def _glyph_to_json(g: PlacedGlyph) -> dict:
    d = g.descriptor
    chart = None
    if d.radial_chart is not None:
        chart = [
            {
                "disease_index": s.disease_index,
                "angle_start": s.angle_start,
                "angle_end": s.angle_end,
                "filled": s.filled,
            }
            for s in d.radial_chart
        ]
    return {
        "person_id": g.person_id,
        "shape": g.shape.value,
        "x": g.x,
        "y": g.y,
        "status": d.status_color_key.value,
        "fill_fraction": d.fill_fraction,
        "inner_scale": math.sqrt(d.fill_fraction),
        "radial_chart": chart,
    }


def layout_to_json(layout: RadialLayout) -> dict:
    """Layout document per the published schema; see README."""
    return {
        "family_id": layout.family_id,
        "config": config_to_json(layout.config),
        "max_generation": layout.max_generation,
        "bounds": layout.bounds,
        "nodes": [
            {
                "unit_id": n.unit_id,
                "generation": n.generation,
                "radius": n.radius,
                "theta": n.theta,
                "span": [n.span[0], n.span[1]],
                "glyphs": [_glyph_to_json(g) for g in n.glyphs],
            }
            for n in layout.nodes
        ],
        "links": [{"from": a, "to": b} for a, b in layout.links],
        "warnings": list(layout.warnings),
    }


def layout_json_str(layout: RadialLayout) -> str:
    return jsonio.dumps(layout_to_json(layout))
