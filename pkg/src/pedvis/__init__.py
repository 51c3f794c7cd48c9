"""pedvis: radial pedigree layout, glyph encodings, and suicide-pattern
analytics for multi-generation family datasets."""

from .analytics import (
    IsolatedBurdenFinding,
    LineageChain,
    Scope,
    ancestors_inclusive,
    diagnosis_cooccurrence,
    isolated_burden,
    lowest_common_ancestors,
    suicide_lineages,
)
from .config import AppConfig, load_config, parse_config
from .core import (
    CoupleUnit,
    DiagnosisRecord,
    PedigreeGraph,
    Person,
    Sex,
    VitalStatus,
    build_graph,
)
from .errors import (
    ConfigError,
    CycleError,
    DanglingReference,
    DomainError,
    DuplicatePerson,
    IndexOutOfRange,
    PaletteError,
    PedvisError,
    SchemaError,
    UnknownPerson,
    UnknownUnit,
)
from .glyphs import (
    DotPlotDot,
    DotPlotSeries,
    GlyphDescriptor,
    Role,
    SectorSpec,
    Shape,
    age_fill_fraction,
    build_dotplots,
    glyph_for,
    inner_fill_geometry,
    sectors_for,
)
from .ingest import (
    Dataset,
    Issue,
    ValidationReport,
    load_dataset,
    parse_dataset,
    serialize_dataset,
)
from .layout import (
    Direction,
    LayoutConfig,
    PlacedGlyph,
    PlacedUnit,
    RadialLayout,
    compute_layout,
    layout_json_str,
    layout_to_json,
    leaf_count,
)
from .render import (
    Palette,
    RenderConfig,
    render_compare,
    render_family,
)

__version__ = "1.0.0"

__all__ = [
    "AppConfig",
    "ConfigError",
    "CoupleUnit",
    "CycleError",
    "DanglingReference",
    "Dataset",
    "DiagnosisRecord",
    "Direction",
    "DomainError",
    "DotPlotDot",
    "DotPlotSeries",
    "DuplicatePerson",
    "GlyphDescriptor",
    "IndexOutOfRange",
    "IsolatedBurdenFinding",
    "Issue",
    "LayoutConfig",
    "LineageChain",
    "PaletteError",
    "Palette",
    "PedigreeGraph",
    "PedvisError",
    "Person",
    "PlacedGlyph",
    "PlacedUnit",
    "RadialLayout",
    "RenderConfig",
    "Role",
    "SchemaError",
    "Scope",
    "SectorSpec",
    "Sex",
    "Shape",
    "UnknownPerson",
    "UnknownUnit",
    "ValidationReport",
    "VitalStatus",
    "age_fill_fraction",
    "ancestors_inclusive",
    "build_dotplots",
    "build_graph",
    "compute_layout",
    "diagnosis_cooccurrence",
    "glyph_for",
    "inner_fill_geometry",
    "isolated_burden",
    "layout_json_str",
    "layout_to_json",
    "leaf_count",
    "load_config",
    "load_dataset",
    "lowest_common_ancestors",
    "parse_config",
    "parse_dataset",
    "render_compare",
    "render_family",
    "sectors_for",
    "serialize_dataset",
    "suicide_lineages",
]
