"""Oscillatory integrals, Fresnel integrals and the complex second mean value theorem.

The integrals ``int_a^b exp(i f(x)) dx`` are computed with the adaptive
Gauss-Kronrod engine; oscillation is resolved purely by subdivision, which is
adequate while ``|f'|`` stays below a few thousand.
"""
from __future__ import annotations

import cmath
import dataclasses
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .exceptions import PreconditionError, VerificationError
from .poly import Polynomial
from .quadrature import integrate, integrate_panels, vectorize_callable
from .report import BoundReport
from .search import golden_section_max

DEFAULT_TOL = 1e-10
PRECONDITION_GRID = 1000
MVT_RESOLUTIONS = (10 ** 3, 10 ** 4, 10 ** 5)


@dataclass(frozen=True)
class IntegralResult:
    value: complex
    modulus: float
    argument: float
    error_estimate: float

    @classmethod
    def from_value(cls, value: complex, error: float) -> "IntegralResult":
        value = complex(value)
        return cls(value, abs(value), cmath.phase(value), float(error))


@dataclass(frozen=True)
class PhaseFunction:
    """A real phase ``f`` on ``domain`` with optional derivatives ``f', f'', ...``.

    Supplied derivatives are checked against central differences at 32
    seeded random points of the domain.
    """

    f: Callable
    derivatives: Sequence[Callable] = field(default_factory=tuple)
    domain: Optional[tuple[float, float]] = None

    def __post_init__(self):
        object.__setattr__(self, "derivatives", tuple(self.derivatives))
        if self.derivatives and self.domain is not None:
            self.check_derivatives()

    def __call__(self, x):
        return self.f(x)

    def derivative(self, k: int = 1) -> Optional[Callable]:
        if k == 0:
            return self.f
        if k <= len(self.derivatives):
            return self.derivatives[k - 1]
        return None

    def check_derivatives(self, points: int = 32, seed: int = 0) -> None:
        a, b = self.domain
        xs = np.random.default_rng(seed).uniform(a, b, points)
        chain = (self.f,) + self.derivatives
        for k in range(1, len(chain)):
            lower, upper = chain[k - 1], chain[k]
            exact = np.array([float(upper(x)) for x in xs])
            h = 1e-6 * np.maximum(1.0, np.abs(xs))
            fd = np.array([(float(lower(x + s)) - float(lower(x - s))) / (2 * s)
                           for x, s in zip(xs, h)])
            denom = np.maximum(np.abs(exact), np.abs(exact).mean() + 1e-300)
            worst = float(np.max(np.abs(fd - exact) / denom))
            if worst > 1e-5:
                raise PreconditionError(
                    f"derivative {k} disagrees with central differences (rel. error {worst:.3g})")

    @classmethod
    def from_polynomial(cls, p: Polynomial, domain=None, order: Optional[int] = None):
        order = p.degree if order is None else order
        derivs = tuple(p.derivative(k) for k in range(1, order + 1))
        return cls(p, derivs, domain)


def _as_phase(phase) -> PhaseFunction:
    if isinstance(phase, PhaseFunction):
        return phase
    if isinstance(phase, Polynomial):
        return PhaseFunction.from_polynomial(phase)
    return PhaseFunction(phase)


def oscillatory_integral(phase, a: float, b: float, tol: float = DEFAULT_TOL,
                         max_depth: int = 60) -> IntegralResult:
    """``int_a^b exp(i f(x)) dx`` with error estimate at most ``tol``."""
    if not a < b:
        raise ValueError("need a < b")
    if tol <= 0:
        raise ValueError("tol must be positive")
    f = vectorize_callable(_as_phase(phase).f)
    value, err = integrate(lambda x: np.exp(1j * f(x)), a, b, tol, max_depth=max_depth)
    return IntegralResult.from_value(value, err)


def fresnel(u: float, tol: float = 1e-12) -> tuple[float, float]:
    """``(int_0^u cos(x^2) dx, int_0^u sin(x^2) dx)``.

    Panels are split where ``x^2`` crosses multiples of ``pi/2``.
    """
    if u < 0:
        raise ValueError("u must be nonnegative")
    if u == 0:
        return 0.0, 0.0
    kmax = int(2 * u * u / math.pi)
    breaks = [math.sqrt(k * math.pi / 2) for k in range(1, kmax + 1)]
    value, _ = integrate(lambda x: np.exp(1j * x * x), 0.0, u, tol, breakpoints=breaks)
    return value.real, value.imag


def _check_monotone(f, a: float, b: float, increasing: Optional[bool] = None) -> bool:
    xs = np.linspace(a, b, PRECONDITION_GRID)
    ys = np.array([float(f(x)) for x in xs])
    d = np.diff(ys)
    slack = 1e-12 * max(1.0, float(np.max(np.abs(ys))))
    up = bool(np.all(d >= -slack))
    down = bool(np.all(d <= slack))
    if increasing is True and not up:
        raise PreconditionError("function is not increasing on the grid")
    if increasing is False and not down:
        raise PreconditionError("function is not decreasing on the grid")
    if not (up or down):
        raise PreconditionError("function is not monotone on the grid")
    return up


def complex_mvt_residual(f, g, a: float, b: float, c: float, zero_endpoint: bool = False,
                         tol: float = 1e-13) -> float:
    """``f(a) Re(e^{-i t} int_a^c g) + f(b) Re(e^{-i t} int_c^b g) - |I|`` with ``t = arg I``."""
    fv, gv = vectorize_callable(f), vectorize_callable(g)
    I, _ = integrate(lambda x: fv(x) * gv(x), a, b, tol)
    rot = cmath.exp(-1j * cmath.phase(I))
    left, _ = integrate(gv, a, c, tol)
    right, _ = integrate(gv, c, b, tol)
    fb = 0.0 if zero_endpoint else float(f(b))
    return float(f(a)) * (rot * left).real + fb * (rot * right).real - abs(I)


def complex_mvt_point(f, g, a: float, b: float, tol: float = 1e-9,
                      zero_endpoint: bool = False) -> float:
    """Find the split point ``c`` of the complex second mean value theorem.

    ``f`` is real and monotone on ``[a, b]``, ``g`` complex and continuous.
    With ``zero_endpoint=True`` the value ``f(b)`` is replaced by 0 (the
    clause for ``f`` of constant sign with ``|f|`` decreasing). Returns ``c``
    with residual below ``tol``; raises :class:`VerificationError` otherwise.
    """
    if not a < b:
        raise ValueError("need a < b")
    _check_monotone(f, a, b)
    quad_tol = min(1e-13, tol * 1e-3)
    fv, gv = vectorize_callable(f), vectorize_callable(g)
    I, _ = integrate(lambda x: fv(x) * gv(x), a, b, quad_tol)
    absI = abs(I)
    rot = cmath.exp(-1j * cmath.phase(I))
    fa = float(f(a))
    fb = 0.0 if zero_endpoint else float(f(b))
    total, _ = integrate(gv, a, b, quad_tol)

    def h_from(Gc: complex) -> float:
        return fa * (rot * Gc).real + fb * (rot * (total - Gc)).real - absI

    best = (math.inf, a)
    for res in MVT_RESOLUTIONS:
        cs = np.linspace(a, b, res + 1)
        pieces, _ = integrate_panels(gv, cs, quad_tol)
        G = np.concatenate([[0j], np.cumsum(pieces)])
        hs = h_from(G)
        k = int(np.argmin(np.abs(hs)))
        if abs(hs[k]) < tol:
            return float(cs[k])
        if abs(hs[k]) < best[0]:
            best = (abs(hs[k]), float(cs[k]))
        flips = np.flatnonzero(np.sign(hs[:-1]) * np.sign(hs[1:]) < 0)
        if flips.size:
            j = int(flips[0])
            return _bisect_mvt(h_from, gv, cs[j], cs[j + 1], G[j], hs[j], tol, quad_tol)

    # tangential root: minimise |h| near the best grid point
    c0 = best[1]
    width = (b - a) / MVT_RESOLUTIONS[-1]
    lo, hi = max(a, c0 - width), min(b, c0 + width)
    G_lo, _ = integrate(gv, a, lo, quad_tol)

    def neg_abs_h(c):
        piece, _ = integrate(gv, lo, c, quad_tol)
        return -abs(h_from(G_lo + piece))

    c, neg, _ = golden_section_max(neg_abs_h, lo, hi, 1e-14)
    if -neg < tol:
        return float(c)
    raise VerificationError(
        f"no split point with residual < {tol:g} (best {-neg:.3g}); "
        "check monotonicity of f and continuity of g")


def _bisect_mvt(h_from, gv, lo, hi, G_lo, h_lo, tol, quad_tol) -> float:
    lo, hi = float(lo), float(hi)
    c, hc = lo, h_lo
    for _ in range(200):
        c = 0.5 * (lo + hi)
        piece, _ = integrate(gv, lo, c, quad_tol)
        hc = h_from(G_lo + piece)
        if abs(hc) < 0.01 * tol or hi - lo < 1e-15 * max(1.0, abs(c)):
            break
        if (hc < 0) == (h_lo < 0):
            lo, G_lo, h_lo = c, G_lo + piece, hc
        else:
            hi = c
    if abs(hc) >= tol:
        raise VerificationError(f"bisection stalled with residual {abs(hc):.3g}")
    return c


def argument_obstruction_distance(theta: float, fa: float) -> float:
    """Angular distance between ``theta`` and ``f(a) + 3 pi / 2`` (mod 2 pi)."""
    d = (theta - fa - 1.5 * math.pi) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def verify_first_vdc(phase, a: float, b: float, lam: float,
                     tol: float = 1e-12) -> BoundReport:
    """Check ``|I| <= (1 + sin(theta - f(a))) / lambda <= 2 / lambda``.

    Requires ``f'`` increasing with ``f' >= lambda`` on ``[a, b]``, spot-checked
    on a grid (central differences when no derivative is supplied).
    """
    ph = _as_phase(phase)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    fprime = ph.derivative(1)
    xs = np.linspace(a, b, PRECONDITION_GRID)
    if fprime is None:
        s = 1e-6 * max(1.0, abs(b - a))
        d1 = np.array([(float(ph.f(x + s)) - float(ph.f(x - s))) / (2 * s) for x in xs])
    else:
        d1 = np.array([float(fprime(x)) for x in xs])
    if np.min(d1) < lam * (1 - 1e-9):
        raise PreconditionError(f"f' drops to {np.min(d1):.6g} below lambda = {lam:.6g}")
    if np.any(np.diff(d1) < -1e-9 * max(1.0, float(np.max(np.abs(d1))))):
        raise PreconditionError("f' is not increasing on the grid")
    res = oscillatory_integral(ph, a, b, tol)
    fa = float(ph.f(a))
    sharp = (1 + math.sin(res.argument - fa)) / lam
    crude = 2.0 / lam
    report = BoundReport.compare(
        "first_van_der_corput", sharp, res.modulus,
        notes="|int e^{if}| <= (1 + sin(theta - f(a)))/lambda <= 2/lambda",
        theta=res.argument, bound_two_over_lambda=crude,
        margin_two_over_lambda=crude - res.modulus, error_estimate=res.error_estimate,
        obstruction_distance=argument_obstruction_distance(res.argument, fa))
    if crude - res.modulus < -1e-9:
        return dataclasses.replace(report, passed=False)
    return report


def fourier_coefficient(f, n: int, tol: float = 1e-12) -> complex:
    """``int_0^1 f(x) exp(-2 pi i n x) dx``."""
    fv = vectorize_callable(f)
    breaks = [k / (2 * abs(n)) for k in range(1, 2 * abs(n))] if n else None
    value, _ = integrate(lambda x: fv(x) * np.exp(-2j * math.pi * n * x), 0.0, 1.0, tol,
                         breakpoints=breaks)
    return value


def verify_riemann_lebesgue(f, n: int, tol: float = 1e-12) -> BoundReport:
    """Decay bound for Fourier coefficients of an increasing ``f`` on [0, 1].

    Both the ``(1 - sin theta)`` and ``(1 + sin theta)`` variants of
    ``(f(1) - f(0)) (1 +- sin theta) / (2 pi n)`` are evaluated; ``passed``
    follows the ``(1 + sin theta)`` variant, which is the one the mean value
    argument actually yields.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    _check_monotone(f, 0.0, 1.0, increasing=True)
    F = fourier_coefficient(f, n, tol)
    mod = abs(F)
    theta = cmath.phase(F) if mod > 1e-14 else 0.0
    jump = float(f(1.0)) - float(f(0.0))
    plus = jump * (1 + math.sin(theta)) / (2 * math.pi * n)
    minus = jump * (1 - math.sin(theta)) / (2 * math.pi * n)
    return BoundReport.compare(
        f"riemann_lebesgue_n{n}", plus, mod,
        notes="(f(1)-f(0))(1+sin theta)/(2 pi n); printed (1-sin theta) variant audited",
        theta=theta, fourier_real=F.real, fourier_imag=F.imag,
        printed_bound=minus, printed_margin=minus - mod,
        printed_holds=minus - mod >= -1e-9)
