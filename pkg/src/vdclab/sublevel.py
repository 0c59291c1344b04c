"""Sublevel-set measurement and the sharp estimate
``|{x : |f(x)| <= alpha}| <= (n! 2**(2n-1))**(1/n) (alpha/lambda)**(1/n)``.

Sets are found by bracketing sign changes of ``|f| - alpha`` on a uniform grid
and bisecting each crossing; features narrower than one grid cell can be
missed, which only ever under-reports the measure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import PreconditionError
from .poly import Polynomial
from .quadrature import vectorize_callable
from .report import BoundReport
from .search import golden_section_max

DEFAULT_GRID = 10 ** 5
CROSSING_TOL = 1e-12
# |f| = alpha counts as inside up to this relative slack (touching extrema)
MEMBERSHIP_SLACK = 1e-12


@dataclass(frozen=True)
class SublevelMeasurement:
    alpha: float
    measure: float
    intervals: tuple[tuple[float, float], ...]
    resolution: int
    lam: Optional[float] = None


def _inside(values: np.ndarray, alpha: float) -> np.ndarray:
    return np.abs(values) - alpha <= MEMBERSHIP_SLACK * max(1.0, alpha)


def measure_sublevel(f, a: float, b: float, alpha: float,
                     grid: int = DEFAULT_GRID) -> SublevelMeasurement:
    """Measure ``{x in (a, b) : |f(x)| <= alpha}``."""
    if not a < b:
        raise ValueError("need a < b")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if grid < 2:
        raise ValueError("grid must be at least 2")
    fv = vectorize_callable(f)
    x = np.linspace(a, b, grid)
    y = np.asarray(fv(x), dtype=float)
    if not np.all(np.isfinite(y)):
        raise ValueError("f is not finite on the grid")
    inside = _inside(y, alpha)
    cells = np.flatnonzero(inside[:-1] != inside[1:])
    lo, hi = x[cells].copy(), x[cells + 1].copy()
    lo_in = inside[cells]
    while lo.size and np.max(hi - lo) > CROSSING_TOL:
        mid = 0.5 * (lo + hi)
        ym = np.asarray(fv(mid), dtype=float)
        if not np.all(np.isfinite(ym)):
            raise ValueError("f is not finite during refinement")
        same = _inside(ym, alpha) == lo_in
        lo = np.where(same, mid, lo)
        hi = np.where(same, hi, mid)
    crossings = 0.5 * (lo + hi)
    edges = [a] if inside[0] else []
    edges.extend(float(c) for c in crossings)
    if inside[-1]:
        edges.append(b)
    intervals = tuple((edges[i], edges[i + 1]) for i in range(0, len(edges), 2))
    measure = math.fsum(r - l for l, r in intervals)
    return SublevelMeasurement(float(alpha), measure, intervals, grid)


def sublevel_constant(n: int) -> float:
    """``(n! 2**(2n-1))**(1/n)`` through log-gamma."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return math.exp((math.lgamma(n + 1) + (2 * n - 1) * math.log(2.0)) / n)


def sublevel_bound(n: int, alpha: float, lam: float) -> float:
    if alpha <= 0 or lam <= 0:
        raise ValueError("alpha and lambda must be positive")
    return sublevel_constant(n) * (alpha / lam) ** (1.0 / n)


def verify_sublevel(f, n: int, a: float, b: float, alpha: float, lam: float,
                    grid: int = DEFAULT_GRID, f_n=None) -> BoundReport:
    """Measure the sublevel set of ``f`` and compare it with the sharp bound.

    ``lam`` is the caller's lower bound for ``|f^(n)|``; when ``f_n`` is given
    it is spot-checked on the grid.
    """
    if f_n is not None:
        xs = np.linspace(a, b, grid)
        vals = np.abs(np.asarray(vectorize_callable(f_n)(xs), dtype=float))
        worst = float(vals.min())
        if worst < lam * (1 - 1e-9):
            raise PreconditionError(
                f"|f^({n})| drops to {worst:.6g} < lambda = {lam:.6g} on ({a}, {b})")
    m = measure_sublevel(f, a, b, alpha, grid)
    bound = sublevel_bound(n, alpha, lam)
    return BoundReport.compare(
        f"sublevel_n{n}", bound, m.measure,
        notes="|{|f| <= alpha}| against (n! 2^(2n-1))^(1/n) (alpha/lambda)^(1/n)",
        alpha=float(alpha), lam=float(lam), n=n, intervals=[list(iv) for iv in m.intervals])


def auto_lambda(p: Polynomial, n: int, a: float, b: float, grid: int = 10 ** 4) -> float:
    """``min |p^(n)|`` on ``[a, b]`` by grid scan plus golden refinement."""
    dn = p.derivative(n)
    xs = np.linspace(a, b, grid)
    vals = np.abs(dn(xs))
    k = int(np.argmin(vals))
    lo, hi = xs[max(k - 1, 0)], xs[min(k + 1, grid - 1)]
    _, neg, _ = golden_section_max(lambda t: -abs(dn(t)), lo, hi, 1e-13)
    return float(min(vals[k], -neg))
