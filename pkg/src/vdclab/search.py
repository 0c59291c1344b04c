"""Deterministic one-dimensional maximisation helpers."""
from __future__ import annotations

import math

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, lo: float, hi: float, tol: float = 1e-10, max_iter: int = 500):
    """Maximise a unimodal ``f`` on ``[lo, hi]``.

    Returns ``(x, f(x), iterations)``. The endpoints are compared against the
    interior optimum so a monotone ``f`` yields the better endpoint.
    """
    a, b = float(lo), float(hi)
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    it = 0
    while b - a > tol and it < max_iter:
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
        it += 1
    x, fx = (x1, f1) if f1 >= f2 else (x2, f2)
    for edge in (float(lo), float(hi)):
        fe = f(edge)
        if fe > fx:
            x, fx = edge, fe
    return x, fx, it


def scan_then_golden(f, lo: float, hi: float, points: int, tol: float):
    """Coarse scan of ``points`` samples, then golden refinement around the best.

    Returns ``(x, f(x), iterations, best_index)`` where ``best_index`` is the
    winning scan position (0 or ``points - 1`` means the optimum sits on the
    scan boundary).
    """
    step = (hi - lo) / (points - 1)
    xs = [lo + k * step for k in range(points)]
    vals = [f(x) for x in xs]
    k = max(range(points), key=lambda i: (vals[i], -i))
    a = xs[max(k - 1, 0)]
    b = xs[min(k + 1, points - 1)]
    x, fx, it = golden_section_max(f, a, b, tol)
    if vals[k] > fx:
        x, fx = xs[k], vals[k]
    return x, fx, it, k
