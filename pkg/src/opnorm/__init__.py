"""Operator (p,q)-norms of small complex matrices.

Exact closed forms for structured (magic-squared and related) matrices,
exact boundary-line evaluators for arbitrary matrices, witness-certified
lower-bound estimators, and interpolated upper bounds that combine into
certified brackets.  A CLI and an HTTP service wrap the library.
"""
from .exponents import (
    INF,
    ONE,
    TWO,
    Exponent,
    ExponentError,
    dual_map,
    functional_maximizer,
    hoelder_max,
    holder_conjugate,
    parse_exponent,
    vector_norm,
)
from .result import (
    STATUS_BRACKET,
    STATUS_EXACT,
    STATUS_LOWER,
    NormEstimate,
    witness_ratio,
)
from .structure import (
    MatrixClass,
    all_ones_vector,
    circulant_matrix,
    classify,
    closed_form_norm,
    magic_alpha,
)
from .exact import (
    exact_norm,
    norm_1_to_q,
    norm_2_to_2,
    norm_dual,
    norm_inf_to_p_nonneg,
    norm_magic_interior,
    norm_p_to_inf,
)
from .interpolation import (
    ConvexityReport,
    Segment,
    SquarePoint,
    StrictnessReport,
    check_log_convexity,
    check_strictness_line,
    duality_segment,
    mn_exponents,
    rt_upper_bound,
    wedge_segment,
)
from .estimate import (
    EstimatorConfig,
    bracket_norm,
    brute_force_norm,
    power_iteration_norm,
    rt_upper_bound_at,
)
from .strategy import ScanCell, compute_norm, scan_grid
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "Exponent",
    "ExponentError",
    "ONE",
    "TWO",
    "INF",
    "parse_exponent",
    "holder_conjugate",
    "vector_norm",
    "dual_map",
    "hoelder_max",
    "functional_maximizer",
    "NormEstimate",
    "STATUS_EXACT",
    "STATUS_LOWER",
    "STATUS_BRACKET",
    "witness_ratio",
    "MatrixClass",
    "classify",
    "closed_form_norm",
    "circulant_matrix",
    "magic_alpha",
    "all_ones_vector",
    "exact_norm",
    "norm_p_to_inf",
    "norm_1_to_q",
    "norm_inf_to_p_nonneg",
    "norm_dual",
    "norm_2_to_2",
    "norm_magic_interior",
    "SquarePoint",
    "Segment",
    "rt_upper_bound",
    "mn_exponents",
    "duality_segment",
    "wedge_segment",
    "ConvexityReport",
    "StrictnessReport",
    "check_log_convexity",
    "check_strictness_line",
    "EstimatorConfig",
    "power_iteration_norm",
    "brute_force_norm",
    "rt_upper_bound_at",
    "bracket_norm",
    "compute_norm",
    "ScanCell",
    "scan_grid",
    "CheckResult",
    "run_suite",
]
