"""Deterministic standalone SVG rendering of layouts and dot-plots.

Documents are assembled by plain string concatenation with a fixed
element order (links, then units by unit id, then legend) and all
coordinates formatted to nine significant digits, so identical inputs
produce byte-identical output suitable for golden-file tests.

Layout coordinates are y-up; rendering flips the y axis per point rather
than via a scale(1,-1) transform so that text and stroke widths stay in
screen units.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .core import VitalStatus
from .errors import ConfigError, PaletteError
from .glyphs import DotPlotSeries, GlyphDescriptor, Shape
from .layout import PlacedGlyph, RadialLayout

SINGLE_CANVAS = (800, 900)
COMPARE_CANVAS = (1600, 900)

DEFAULT_DISEASE_COLORS: tuple[str, ...] = (
    "#1F77B4",
    "#FF7F0E",
    "#2CA02C",
    "#D62728",
    "#9467BD",
    "#8C564B",
    "#E377C2",
    "#BCBD22",
    "#17BECF",
    "#AEC7E8",
    "#FFBB78",
    "#98DF8A",
    "#FF9896",
    "#C5B0D5",
    "#C49C94",
    "#F7B6D2",
)

_HEX_RE = re.compile(r"#[0-9A-Fa-f]{6}\Z")


@dataclass(frozen=True)
class Palette:
    """Status and disease color tables (documented, bit-exact defaults)."""

    alive: str = "#2A9D8F"
    deceased: str = "#9E9E9E"
    suicide: str = "#000000"
    disease_colors: tuple[str, ...] = DEFAULT_DISEASE_COLORS

    def validate(self) -> None:
        for label, color in self._status_table().items():
            if not _HEX_RE.match(color):
                raise PaletteError(f"bad {label} color {color!r}")
        for i, color in enumerate(self.disease_colors):
            if not _HEX_RE.match(color):
                raise PaletteError(f"bad disease color {i}: {color!r}")

    def _status_table(self) -> dict[str, str]:
        return {
            VitalStatus.ALIVE.value: self.alive,
            VitalStatus.DECEASED.value: self.deceased,
            VitalStatus.SUICIDE.value: self.suicide,
        }

    def status_color(self, key: VitalStatus) -> str:
        color = self._status_table().get(key.value)
        if color is None:
            raise PaletteError(f"no color for status {key!r}")
        return color

    def disease_color(self, index: int) -> str:
        if not 0 <= index < len(self.disease_colors):
            raise PaletteError(
                f"no color for disease index {index} "
                f"(palette has {len(self.disease_colors)})"
            )
        return self.disease_colors[index]

    def to_json(self) -> dict:
        return {
            "status": self._status_table(),
            "diseases": list(self.disease_colors),
        }


@dataclass(frozen=True)
class RenderConfig:
    """Canvas and feature flags.  Unset dimensions fall back to 800x900
    for single-family documents and 1600x900 for comparisons."""

    canvas_width: int | None = None
    canvas_height: int | None = None
    palette: Palette = Palette()
    show_dotplots: bool = True
    show_legend: bool = True

    def validate(self) -> None:
        for label, v in (("canvas_width", self.canvas_width),
                         ("canvas_height", self.canvas_height)):
            if v is not None and v <= 0:
                raise ConfigError(f"{label} must be positive, got {v}")
        self.palette.validate()

    def size(self, default: tuple[int, int]) -> tuple[int, int]:
        return (
            self.canvas_width if self.canvas_width is not None else default[0],
            self.canvas_height if self.canvas_height is not None else default[1],
        )


def _fmt(x: float) -> str:
    s = format(float(x), ".9g")
    return "0" if s == "-0" else s


def _attr(value: object) -> str:
    return escape(str(value), {'"': "&quot;"})


def _sector_path(
    cx: float, cy: float, r: float, start_deg: float, end_deg: float
) -> str:
    a0 = math.radians(start_deg)
    a1 = math.radians(end_deg)
    x0, y0 = cx + r * math.cos(a0), cy - r * math.sin(a0)
    x1, y1 = cx + r * math.cos(a1), cy - r * math.sin(a1)
    large = 1 if (end_deg - start_deg) > 180.0 else 0
    # Mathematically counterclockwise; sweep flag 0 in SVG's y-down frame.
    return (
        f"M {_fmt(cx)} {_fmt(cy)} L {_fmt(x0)} {_fmt(y0)} "
        f"A {_fmt(r)} {_fmt(r)} 0 {large} 0 {_fmt(x1)} {_fmt(y1)} Z"
    )


def _radial_chart_svg(
    d: GlyphDescriptor, cx: float, cy: float, r: float, palette: Palette
) -> str:
    parts = [f'<g class="radial-chart" data-person="{_attr(d.person_id)}">']
    for sector in d.radial_chart:
        fill = palette.disease_color(sector.disease_index) if sector.filled else "none"
        common = (
            f'fill="{fill}" stroke="#CCCCCC" stroke-width="0.5" '
            f'data-disease="{sector.disease_index}"'
        )
        if sector.angle_end - sector.angle_start >= 360.0 - 1e-9:
            parts.append(
                f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" {common}/>'
            )
        else:
            path = _sector_path(cx, cy, r, sector.angle_start, sector.angle_end)
            parts.append(f'<path d="{path}" {common}/>')
    parts.append("</g>")
    return "".join(parts)


def _glyph_svg(g: PlacedGlyph, k: float, size: float, palette: Palette) -> str:
    px, py = k * g.x, -k * g.y
    s = size * k
    color = palette.status_color(g.descriptor.status_color_key)
    inner_scale = math.sqrt(g.descriptor.fill_fraction)
    parts = []
    if g.shape is Shape.SQUARE:
        parts.append(
            f'<rect class="glyph" data-person="{_attr(g.person_id)}" '
            f'x="{_fmt(px - s / 2)}" y="{_fmt(py - s / 2)}" '
            f'width="{_fmt(s)}" height="{_fmt(s)}" '
            f'fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        if inner_scale > 0:
            si = s * inner_scale
            parts.append(
                f'<rect class="glyph-fill" x="{_fmt(px - si / 2)}" '
                f'y="{_fmt(py - si / 2)}" width="{_fmt(si)}" height="{_fmt(si)}" '
                f'fill="{color}"/>'
            )
    else:
        parts.append(
            f'<circle class="glyph" data-person="{_attr(g.person_id)}" '
            f'cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(s / 2)}" '
            f'fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        if inner_scale > 0:
            parts.append(
                f'<circle class="glyph-fill" cx="{_fmt(px)}" cy="{_fmt(py)}" '
                f'r="{_fmt(s * inner_scale / 2)}" fill="{color}"/>'
            )
    if g.descriptor.radial_chart is not None:
        parts.append(_radial_chart_svg(g.descriptor, px, py, s * 0.8, palette))
    return "".join(parts)


def _family_group(
    layout: RadialLayout,
    glyphs: dict[str, GlyphDescriptor],
    k: float,
    palette: Palette,
) -> str:
    """The tree of one family, coordinates relative to the panel center.

    The caller positions the group with a translate transform; two panels
    showing the same family therefore contain byte-identical groups.
    """
    positions = {
        n.unit_id: (k * n.radius * math.cos(n.theta), -k * n.radius * math.sin(n.theta))
        for n in layout.nodes
    }
    parts = []
    for a, b in layout.links:
        (x0, y0), (x1, y1) = positions[a], positions[b]
        parts.append(
            f'<path class="link" d="M {_fmt(x0)} {_fmt(y0)} L {_fmt(x1)} {_fmt(y1)}" '
            f'stroke="#B0B0B0" stroke-width="1" fill="none"/>'
        )
    size = layout.config.glyph_size
    for node in layout.nodes:
        parts.append(f'<g id="g-unit-{_attr(node.unit_id)}">')
        if len(node.glyphs) == 2:
            g0, g1 = node.glyphs
            parts.append(
                f'<line class="partner-bar" x1="{_fmt(k * g0.x)}" '
                f'y1="{_fmt(-k * g0.y)}" x2="{_fmt(k * g1.x)}" '
                f'y2="{_fmt(-k * g1.y)}" stroke="#666666" stroke-width="1"/>'
            )
        for g in node.glyphs:
            descriptor = glyphs.get(g.person_id)
            if descriptor is None:
                raise ValueError(f"no glyph descriptor for {g.person_id!r}")
            parts.append(
                _glyph_svg(
                    PlacedGlyph(
                        person_id=g.person_id,
                        shape=g.shape,
                        x=g.x,
                        y=g.y,
                        descriptor=descriptor,
                    ),
                    k,
                    size,
                    palette,
                )
            )
        parts.append("</g>")
    return "".join(parts)


def _scale_for(layout: RadialLayout, half_extent: float) -> float:
    return half_extent / layout.bounds if layout.bounds > 0 else 1.0


def _legend_svg(
    x: float, y: float, width: float, entries: list[tuple[str, str]]
) -> str:
    per_row = max(1, int(width - 20) // 150)
    parts = ['<g class="legend">']
    for i, (color, label) in enumerate(entries):
        row, col = divmod(i, per_row)
        ex = x + col * 150
        ey = y + row * 18
        parts.append(
            f'<rect x="{_fmt(ex)}" y="{_fmt(ey)}" width="12" height="12" '
            f'fill="{color}" stroke="#333333" stroke-width="0.5"/>'
        )
        parts.append(
            f'<text x="{_fmt(ex + 17)}" y="{_fmt(ey + 10)}" '
            f'font-family="sans-serif" font-size="11">{escape(label)}</text>'
        )
    parts.append("</g>")
    return "".join(parts)


def _legend_height(n_entries: int, width: float) -> float:
    per_row = max(1, int(width - 20) // 150)
    rows = (n_entries + per_row - 1) // per_row
    return rows * 18 + 16


def _status_entries(palette: Palette) -> list[tuple[str, str]]:
    return [
        (palette.alive, "alive"),
        (palette.deceased, "deceased"),
        (palette.suicide, "suicide"),
    ]


def _document(width: int, height: int, body: str) -> str:
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
        f'<rect width="{width}" height="{height}" fill="#FFFFFF"/>'
        f"{body}</svg>\n"
    )


def _glyph_table(layout: RadialLayout) -> dict[str, GlyphDescriptor]:
    return {
        g.person_id: g.descriptor for node in layout.nodes for g in node.glyphs
    }


def _panel(
    layout: RadialLayout,
    glyphs: dict[str, GlyphDescriptor],
    cx: float,
    cy: float,
    half_extent: float,
    palette: Palette,
) -> str:
    k = _scale_for(layout, half_extent)
    label = (
        f'<text class="family-label" x="0" y="{_fmt(-half_extent - 8)}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="14" '
        f'font-weight="bold">{escape(layout.family_id)}</text>'
    )
    return (
        f'<g id="g-family-{_attr(layout.family_id)}" '
        f'transform="translate({_fmt(cx)} {_fmt(cy)})">'
        f"{label}{_family_group(layout, glyphs, k, palette)}</g>"
    )


def render_family(
    layout: RadialLayout,
    glyphs: dict[str, GlyphDescriptor] | None = None,
    cfg: RenderConfig | None = None,
) -> str:
    """One family as a standalone SVG document."""
    cfg = cfg if cfg is not None else RenderConfig()
    cfg.validate()
    width, height = cfg.size(SINGLE_CANVAS)
    palette = cfg.palette
    if glyphs is None:
        glyphs = _glyph_table(layout)

    legend_h = _legend_height(3, width) if cfg.show_legend else 0
    tree_h = height - legend_h
    half = min(width, tree_h) / 2 - 28
    body = _panel(layout, glyphs, width / 2, tree_h / 2 + 8, half, palette)
    if cfg.show_legend:
        body += _legend_svg(14, tree_h + 4, width, _status_entries(palette))
    return _document(width, height, body)


def _dotplot_svg(
    dotplots: list[DotPlotSeries],
    x: float,
    y: float,
    width: float,
    height: float,
    palette: Palette,
) -> str:
    """All series as vertical dot stacks over a shared baseline."""
    n = max(1, len(dotplots))
    baseline = y + height - 34
    max_count = max((len(s.dots) for s in dotplots), default=0)
    spacing = min(10.0, (height - 44) / max_count) if max_count else 10.0
    radius = min(4.0, spacing * 0.45)
    parts = ['<g class="dotplots">']
    parts.append(
        f'<line x1="{_fmt(x)}" y1="{_fmt(baseline)}" x2="{_fmt(x + width)}" '
        f'y2="{_fmt(baseline)}" stroke="#333333" stroke-width="1"/>'
    )
    for series in dotplots:
        col_x = x + (series.disease_index + 0.5) * width / n
        color = palette.disease_color(series.disease_index)
        for j, dot in enumerate(series.dots):
            cy = baseline - radius - 2 - j * spacing
            parts.append(
                f'<circle class="dot" cx="{_fmt(col_x)}" cy="{_fmt(cy)}" '
                f'r="{_fmt(radius)}" fill="{color}" '
                f'data-person="{_attr(dot.person_id)}" '
                f'data-family="{_attr(dot.family_id)}" '
                f'data-age="{dot.age_at_diagnosis}"/>'
            )
        parts.append(
            f'<text x="{_fmt(col_x)}" y="{_fmt(baseline + 12)}" '
            f'font-family="sans-serif" font-size="9" text-anchor="end" '
            f'transform="rotate(-35 {_fmt(col_x)} {_fmt(baseline + 12)})">'
            f"{escape(series.disease_name)}</text>"
        )
    parts.append("</g>")
    return "".join(parts)


def render_compare(
    left: RadialLayout,
    right: RadialLayout,
    dotplots: list[DotPlotSeries] | None = None,
    cfg: RenderConfig | None = None,
) -> str:
    """Two families side by side with a shared dot-plot strip and legend."""
    cfg = cfg if cfg is not None else RenderConfig()
    cfg.validate()
    width, height = cfg.size(COMPARE_CANVAS)
    palette = cfg.palette
    dotplots = dotplots if dotplots is not None else []

    entries = _status_entries(palette)
    if cfg.show_legend:
        entries = entries + [
            (palette.disease_color(s.disease_index), s.disease_name)
            for s in dotplots
        ]
        legend_h = _legend_height(len(entries), width)
    else:
        legend_h = 0
    dot_h = 170 if cfg.show_dotplots and dotplots else 0
    tree_h = height - dot_h - legend_h
    half = min(width / 2, tree_h) / 2 - 28

    body = _panel(left, _glyph_table(left), width / 4, tree_h / 2 + 8, half, palette)
    body += _panel(
        right, _glyph_table(right), 3 * width / 4, tree_h / 2 + 8, half, palette
    )
    if dot_h:
        body += _dotplot_svg(dotplots, 40, tree_h, width - 80, dot_h, palette)
    if cfg.show_legend:
        body += _legend_svg(14, tree_h + dot_h + 4, width, entries)
    return _document(width, height, body)
