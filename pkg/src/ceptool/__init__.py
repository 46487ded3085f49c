"""Exact laboratory for extreme Nash and correlated equilibria of the
bilinear game x*y on strategy sets inside [-1, 1]."""

from .cecheck import (
    Integrand,
    ProjectionPair,
    find_ce_violation,
    is_ce_definition,
    is_ce_projection,
    projections,
)
from .core import (
    FiniteGame,
    FiniteMeasure,
    HypothesisError,
    InvalidGameError,
    MixedStrategy,
    Rational,
    SignedFiniteMeasure,
    SupportError,
    example_game,
    format_rational,
    make_example_game,
    matching_pennies,
    measure_mean,
    parse_rational,
    product_measure,
)
from .cycles import (
    CyclePattern,
    PatternError,
    canonical_form,
    count_extreme_ce,
    cycle_measure,
    enumerate_extreme_ce,
    enumerate_patterns,
    extremality_dimension,
    f_ratio,
    pattern_from_odd_values,
    pattern_from_support,
)
from .ergodic import (
    RotationParams,
    SegmentMeasure,
    conditional_mean_residuals,
    equidistribution_check,
    rational_orbit_to_cycle,
    rotation_map,
    support_segments,
)
from .moments import MomentBasis, caratheodory_split, moments_of, non_describability_demo
from .nash import NashPair, count_extreme_nash, enumerate_extreme_nash, is_nash
from .polytope import (
    HPolytope,
    InfeasibleSystemError,
    UnboundedPolytopeError,
    VertexSet,
    ce_hrep,
    ce_vertices,
    classify_vertices,
    enumerate_vertices,
)

__version__ = "0.1.0"
