"""Closed-form constants of the van der Corput family and their checks.

Every factorial-bearing constant goes through ``math.lgamma`` so the
asymptotic regimes (n up to 1e5) are reachable.
"""
from __future__ import annotations

import math

from .osc import oscillatory_integral
from .poly import chebyshev
from .report import BoundReport
from .search import golden_section_max
from .sublevel import sublevel_constant

LN2 = math.log(2.0)
FOUR_OVER_E = 4.0 / math.e

#: Historical constants, kept as annotations only.
HISTORICAL_CONSTANTS = (
    {"name": "van der Corput, first derivative", "n": 1, "value": 2 * math.sqrt(2)},
    {"name": "Zygmund, first derivative", "n": 1, "value": 4.0},
    {"name": "Stein, first derivative", "n": 1, "value": 3.0},
    {"name": "van der Corput, second derivative", "n": 2, "value": 2 ** 1.75 * 2},
)


def vdc_constant(n: int) -> float:
    """``((n-1)! 2**(2n-1) / (n-1)**(n-2))**(1/n)``, the factor multiplying ``n / lambda**(1/n)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    log = math.lgamma(n) + (2 * n - 1) * LN2 - (n - 2) * math.log(n - 1)
    return math.exp(log / n)


def vdc_bound(n: int, lam: float) -> float:
    if lam <= 0:
        raise ValueError("lambda must be positive")
    return vdc_constant(n) * n / lam ** (1.0 / n)


def poly_corollary_constant(n: int) -> float:
    """Constant for polynomial phases of degree n: bound is ``C_n / |a_n|**(1/n)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return 2.0
    log = (2 * n - 1) * LN2 + (n - 1) * math.log(n) - (n - 2) * math.log(n - 1)
    return math.exp(log / n)


def n2_bound(lam: float) -> float:
    """``2 * 3**(3/4) / sqrt(lambda)``."""
    if lam <= 0:
        raise ValueError("lambda must be positive")
    return 2 * 3 ** 0.75 / math.sqrt(lam)


def n2_split_bound(theta: float, alpha: float, lam: float = 1.0) -> float:
    """Three-piece estimate ``2(1 + sin t)/alpha + 2 alpha cos t / lambda``."""
    return 2 * (1 + math.sin(theta)) / alpha + 2 * alpha * math.cos(theta) / lam


def n2_optimal_alpha(theta: float, lam: float = 1.0) -> float:
    """Minimiser of :func:`n2_split_bound` in ``alpha``."""
    return math.sqrt((1 + math.sin(theta)) / math.cos(theta)) * math.sqrt(lam)


def n2_theta_objective(theta: float) -> float:
    """``4 sqrt((cos t, sin t) . (1, cos t))``, the split bound at the optimal alpha (lambda = 1)."""
    c, s = math.cos(theta), math.sin(theta)
    return 4 * math.sqrt(max(c * 1 + s * c, 0.0))


def n2_printed_objective(theta: float) -> float:
    """``2 sqrt((cos t, sin t) . (1, sin t))`` as it is typeset; peaks at pi/3, not pi/6."""
    c, s = math.cos(theta), math.sin(theta)
    return 2 * math.sqrt(max(c + s * s, 0.0))


def n2_theta_optimum(tol: float = 1e-10) -> tuple[float, float]:
    """Golden-section maximum of :func:`n2_theta_objective` on ``[0, pi/2]``."""
    theta, value, _ = golden_section_max(n2_theta_objective, 0.0, math.pi / 2, tol)
    return theta, value


def n2_printed_optimum(tol: float = 1e-10) -> tuple[float, float]:
    theta, value, _ = golden_section_max(n2_printed_objective, 0.0, math.pi / 2, tol)
    return theta, value


def arhipov_constant(n: int) -> float:
    """Earlier constant ``2**(5/2) pi**(1/n) (1 - 1/n)``, for comparison."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return 2 ** 2.5 * math.pi ** (1.0 / n) * (1 - 1.0 / n)


def sharpness_upper(n: int) -> float:
    """``(2**n n**n / (n-1)**(n-2))**(1/n)``, the general bound applied to ``T_n / n``."""
    return math.exp(LN2 + math.log(n) - (n - 2) / n * math.log(n - 1))


def asymptotic_sharpness_check(n: int, tol: float = 1e-10) -> BoundReport:
    """Sandwich ``2 - 1/n^2 <= |int_{-1}^1 exp(i T_n(x)/n) dx| <= sharpness_upper(n)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > 50:
        raise ValueError("n above 50 exceeds the default quadrature budget")
    phase = chebyshev(n).scaled(1.0 / n)
    res = oscillatory_integral(phase, -1.0, 1.0, tol)
    lower = 2 - 1.0 / n ** 2
    upper = sharpness_upper(n)
    inside = lower - tol <= res.modulus <= upper + tol
    return BoundReport(
        name=f"asymptotic_sharpness_n{n}", bound=upper, measured=res.modulus,
        margin=upper - res.modulus, passed=inside,
        notes="2 - 1/n^2 <= |int e^{i T_n/n}| <= (2^n n^n/(n-1)^(n-2))^(1/n)",
        extra={"lower": lower, "lower_margin": res.modulus - lower,
               "error_estimate": res.error_estimate})


CSV_COLUMNS = ("n", "sublevel_C", "vdc_C", "corollary_C", "arhipov_C",
               "target_4n_over_e", "target_4_over_e")


def constants_table(n_max: int) -> dict:
    """Rows of every constant for ``2 <= n <= n_max`` plus historical annotations."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = []
    for n in range(2, n_max + 1):
        rows.append({
            "n": n,
            "sublevel_C": sublevel_constant(n),
            "vdc_C": vdc_constant(n),
            "corollary_C": poly_corollary_constant(n),
            "arhipov_C": arhipov_constant(n),
            "target_4n_over_e": 4 * n / math.e,
            "target_4_over_e": FOUR_OVER_E,
        })
    return {"columns": list(CSV_COLUMNS), "rows": rows,
            "annotations": [dict(h) for h in HISTORICAL_CONSTANTS],
            "limits": {"vdc_C": FOUR_OVER_E, "corollary_C": 4.0}}
