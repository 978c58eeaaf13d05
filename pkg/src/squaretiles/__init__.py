"""Exact-rational square tilings of the unit square.

Construct the known minimum-length tilings, measure arbitrary ones,
enumerate every tiling of a q x q grid, and verify the structural
properties behind the closed-form minimum, all in exact arithmetic.
"""

from .constructions import (
    EXCLUDED_COUNTS,
    build_even,
    build_odd_quadrant,
    build_odd_subdivide,
    exchange_to_corner,
    min_length_table,
    min_total_length,
    subdivide_tile,
)
from .checks import (
    CheckReport,
    area_bound,
    check_large_corner_bound,
    check_largest_tile_bound,
    check_opposite_corner,
    construction_corpus,
    enumerated_corpus,
    has_complementary_pair,
    is_minimal,
    large_corner_gap,
    run_suite,
)
from .enumeration import (
    DEFAULT_NODE_BUDGET,
    EnumerationReport,
    GridTiling,
    SweepResult,
    count_by_n,
    iter_grid_tilings,
    min_length_oracle,
    survey_grid,
    sweep_grids,
)
from .errors import (
    BadParameterError,
    InvalidTilingError,
    MalformedProfileError,
    PreconditionUnmetError,
    ResourceLimitError,
    SquareTilesError,
    TilingParseError,
    UnsupportedCountError,
)
from .geometry import (
    Rational,
    Tile,
    Tiling,
    ValidationReport,
    Violation,
    ensure_valid,
    tile,
    total_length,
    validate,
)
from .profiles import StepProfile, check_profile_identity, integrate, vertical_profile
from .render import RenderSpec, decimal_string, render_svg
from .symmetry import (
    ELEMENTS,
    apply_symmetry,
    canonical_form,
    compose,
    inverse,
    orbit,
    transform_tile,
)
from .textformat import format_rational, parse, parse_rational, serialize

__version__ = "0.1.0"
