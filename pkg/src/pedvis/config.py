"""Optional key=value configuration file for layout and render constants.

Format: one ``key = value`` pair per line; blank lines and lines starting
with ``#`` are ignored (inline comments are not supported because hex
colors contain ``#``).  Recognized keys::

    ring_spacing, center_radius, glyph_size, partner_offset, start_angle
        -> floats (LayoutConfig)
    direction            -> ccw | cw
    canvas_width, canvas_height -> positive integers (RenderConfig)
    show_dotplots, show_legend  -> true | false
    palette.alive, palette.deceased, palette.suicide -> #RRGGBB
    palette.disease.N    -> #RRGGBB for disease index N (defaults may be
                            extended, but only contiguously)

Unknown keys are rejected so typos fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ConfigError
from .layout import Direction, LayoutConfig
from .render import DEFAULT_DISEASE_COLORS, Palette, RenderConfig

_LAYOUT_FLOAT_KEYS = (
    "ring_spacing",
    "center_radius",
    "glyph_size",
    "partner_offset",
    "start_angle",
)
_DIRECTIONS = {
    "ccw": Direction.COUNTERCLOCKWISE,
    "counterclockwise": Direction.COUNTERCLOCKWISE,
    "cw": Direction.CLOCKWISE,
    "clockwise": Direction.CLOCKWISE,
}
_BOOLS = {"true": True, "false": False}


@dataclass(frozen=True)
class AppConfig:
    layout: LayoutConfig = LayoutConfig()
    render: RenderConfig = RenderConfig()


def _parse_float(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"{key}: {value!r} is not a number") from None


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key}: {value!r} is not an integer") from None


def _parse_bool(key: str, value: str) -> bool:
    flag = _BOOLS.get(value.lower())
    if flag is None:
        raise ConfigError(f"{key}: {value!r} is not true/false")
    return flag


def parse_config(text: str) -> AppConfig:
    layout = LayoutConfig()
    render = RenderConfig()
    palette = Palette()
    disease_overrides: dict[int, str] = {}

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}: expected key = value, got {raw!r}")
        key = key.strip()
        value = value.strip()
        if key in _LAYOUT_FLOAT_KEYS:
            layout = replace(layout, **{key: _parse_float(key, value)})
        elif key == "direction":
            direction = _DIRECTIONS.get(value.lower())
            if direction is None:
                raise ConfigError(f"direction: {value!r} is not ccw/cw")
            layout = replace(layout, direction=direction)
        elif key in ("canvas_width", "canvas_height"):
            render = replace(render, **{key: _parse_int(key, value)})
        elif key in ("show_dotplots", "show_legend"):
            render = replace(render, **{key: _parse_bool(key, value)})
        elif key in ("palette.alive", "palette.deceased", "palette.suicide"):
            palette = replace(palette, **{key.split(".")[1]: value})
        elif key.startswith("palette.disease."):
            index = _parse_int(key, key[len("palette.disease.") :])
            if index < 0:
                raise ConfigError(f"{key}: negative disease index")
            disease_overrides[index] = value
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")

    if disease_overrides:
        length = max(len(DEFAULT_DISEASE_COLORS), max(disease_overrides) + 1)
        colors = []
        for i in range(length):
            if i in disease_overrides:
                colors.append(disease_overrides[i])
            elif i < len(DEFAULT_DISEASE_COLORS):
                colors.append(DEFAULT_DISEASE_COLORS[i])
            else:
                raise ConfigError(
                    f"palette.disease.{i} missing: extensions must be contiguous"
                )
        palette = replace(palette, disease_colors=tuple(colors))

    render = replace(render, palette=palette)
    layout.validate()
    render.validate()
    return AppConfig(layout=layout, render=render)


def load_config(path: str | None) -> AppConfig:
    """Read a config file; ``None`` yields all defaults."""
    if path is None:
        return AppConfig(layout=LayoutConfig(), render=RenderConfig())
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
