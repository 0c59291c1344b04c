"""Numerical verification of van der Corput type bounds for oscillatory integrals."""
from .bounds import (
    n2_bound,
    poly_corollary_constant,
    sharpness_upper,
    vdc_bound,
    vdc_constant,
)
from .divdiff import (
    divided_difference,
    divided_difference_explicit,
    mean_value_coefficients,
    minimal_node_sum,
    uniqueness_probe,
)
from .exceptions import PreconditionError, QuadratureError, VdcError, VerificationError
from .extremal import conjectured_n2_constant, cubic_search, max_chord, trace_antiderivative
from .osc import (
    PhaseFunction,
    complex_mvt_point,
    fresnel,
    oscillatory_integral,
    verify_first_vdc,
    verify_riemann_lebesgue,
)
from .poly import NodeSet, Polynomial, chebyshev, chebyshev_extrema
from .report import BoundReport
from .sublevel import measure_sublevel, sublevel_bound, sublevel_constant, verify_sublevel

__version__ = "0.1.0"
