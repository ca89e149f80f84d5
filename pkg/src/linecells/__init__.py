"""Exact rational line arrangements: cells, cups and caps, convex position.

Everything runs on fractions.Fraction; no floats enter any predicate.
"""

from .arrangement import (
    BoundClass,
    Cell,
    ConcurrencyReport,
    SignVector,
    bounding_lines,
    classify_cell,
    concurrency_profile,
    convex_position_cell,
    enumerate_cells,
    is_convex_position,
    max_concurrency,
)
from .chains import (
    ChainResult,
    find_unbounded_cell,
    has_k_cell_unbounded,
    is_cap,
    is_cup,
    longest_cap,
    longest_cup,
)
from .cli import main as cli_main
from .constructions import (
    CONVEX_BUDGET,
    KINDS,
    ConstructionSpec,
    construct_F,
    construct_base,
    construct_base_caps,
    construct_prop32,
    construct_thm12,
    contract,
    figure10_family,
    pencil,
    reflect_x,
    reflect_y,
)
from .errors import (
    ConstructionError,
    DuplicateSlopeError,
    EmptyViewportError,
    FamilyParseError,
    InfeasibleSignVectorError,
    LinecellsError,
    ParallelLinesError,
    ParameterRangeError,
)
from .familyfile import parse_family, serialize_family
from .geometry import (
    Line,
    LineFamily,
    Point,
    Rat,
    dual_line,
    dual_point,
    format_rat,
    intersect,
    orientation,
    parse_rat,
    side_of,
)
from .svg import RenderOptions, render_svg
from .verify import (
    PRUNE_MODES,
    VerifyReport,
    exists_n_convex,
    f_L_bound,
    find_n_convex,
    format_report,
    known_exact,
    largest_convex_subset,
    lower_bound_value,
    upper_bound_value,
    verify_properties,
)

__version__ = "0.1.0"

__all__ = [
    "BoundClass",
    "Cell",
    "ChainResult",
    "ConcurrencyReport",
    "ConstructionError",
    "ConstructionSpec",
    "CONVEX_BUDGET",
    "DuplicateSlopeError",
    "EmptyViewportError",
    "FamilyParseError",
    "InfeasibleSignVectorError",
    "KINDS",
    "Line",
    "LineFamily",
    "LinecellsError",
    "ParallelLinesError",
    "ParameterRangeError",
    "Point",
    "PRUNE_MODES",
    "Rat",
    "RenderOptions",
    "SignVector",
    "VerifyReport",
    "bounding_lines",
    "classify_cell",
    "cli_main",
    "concurrency_profile",
    "construct_F",
    "construct_base",
    "construct_base_caps",
    "construct_prop32",
    "construct_thm12",
    "contract",
    "convex_position_cell",
    "dual_line",
    "dual_point",
    "enumerate_cells",
    "exists_n_convex",
    "f_L_bound",
    "figure10_family",
    "find_n_convex",
    "find_unbounded_cell",
    "format_rat",
    "format_report",
    "has_k_cell_unbounded",
    "intersect",
    "is_cap",
    "is_convex_position",
    "is_cup",
    "known_exact",
    "largest_convex_subset",
    "longest_cap",
    "longest_cup",
    "lower_bound_value",
    "max_concurrency",
    "orientation",
    "parse_family",
    "parse_rat",
    "pencil",
    "reflect_x",
    "reflect_y",
    "render_svg",
    "serialize_family",
    "side_of",
    "upper_bound_value",
    "verify_properties",
]
