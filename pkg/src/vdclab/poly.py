"""Polynomials in ascending-coefficient form and Chebyshev polynomials.

Chebyshev coefficients come from the binomial-sum expansion of
``cos(n t) = Re (cos t + i sin t)**n`` evaluated in exact integer arithmetic;
the extrema ``cos(j pi / n)`` are returned in ascending order, so that
``T_n(nodes[j]) == (-1)**(j + n)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

#: Above this degree a Chebyshev-tagged polynomial is evaluated through
#: ``cos(n arccos x)``; up to it, through the three-term recurrence, since
#: Horner on the monomial coefficients loses ~1e-8 near x = +-1 by n = 25.
COEFF_DEGREE_CAP = 30


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial ``sum(coeffs[k] * x**k)``.

    Trailing zero coefficients are stripped, so ``degree`` is the true degree
    (0 for the zero polynomial, whose ``coeffs`` is ``(0.0,)``).
    """

    coeffs: tuple[float, ...]
    # (n, s) when the polynomial is s * T_n; enables the trigonometric path.
    chebyshev_tag: Optional[tuple[int, float]] = field(default=None, compare=False)

    def __post_init__(self):
        cs = [float(c) for c in self.coeffs]
        if not cs:
            cs = [0.0]
        if not all(math.isfinite(c) for c in cs):
            raise ValueError("polynomial coefficients must be finite")
        while len(cs) > 1 and cs[-1] == 0.0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.degree == 0 and self.coeffs[0] == 0.0

    def __call__(self, x):
        return evaluate(self, x)

    def derivative(self, k: int = 1) -> "Polynomial":
        return derivative(self, k)

    def scaled(self, factor: float) -> "Polynomial":
        tag = None
        if self.chebyshev_tag is not None:
            tag = (self.chebyshev_tag[0], self.chebyshev_tag[1] * factor)
        return Polynomial(tuple(c * factor for c in self.coeffs), tag)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0.0,) * (m - len(self.coeffs))
        b = other.coeffs + (0.0,) * (m - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Build from a comma-separated ascending coefficient list, e.g. ``"0,0,0.5"``."""
        parts = [s.strip() for s in text.split(",")]
        if not parts or any(p == "" for p in parts):
            raise ValueError(f"malformed coefficient list: {text!r}")
        try:
            return cls(tuple(float(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"malformed coefficient list: {text!r}") from exc


@dataclass(frozen=True)
class NodeSet:
    """Strictly increasing nodes inside ``interval``.

    With ``closed=True`` nodes may sit on the interval endpoints; otherwise
    they must be interior. The default interval is the hull of the nodes.
    """

    nodes: tuple[float, ...]
    interval: Optional[tuple[float, float]] = None
    closed: bool = True

    def __post_init__(self):
        xs = tuple(float(x) for x in self.nodes)
        if not xs:
            raise ValueError("a node set needs at least one node")
        if not all(math.isfinite(x) for x in xs):
            raise ValueError("nodes must be finite")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("nodes must be pairwise distinct and strictly increasing")
        interval = self.interval if self.interval is not None else (xs[0], xs[-1])
        a, b = float(interval[0]), float(interval[1])
        if self.closed:
            ok = a <= xs[0] and xs[-1] <= b
        else:
            ok = a < xs[0] and xs[-1] < b
        if not ok:
            raise ValueError(f"nodes {xs} not contained in interval {(a, b)}")
        object.__setattr__(self, "nodes", xs)
        object.__setattr__(self, "interval", (a, b))

    @property
    def order(self) -> int:
        """The divided-difference order n (one less than the node count)."""
        return len(self.nodes) - 1

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.nodes, dtype=float)


def as_nodeset(nodes) -> NodeSet:
    if isinstance(nodes, NodeSet):
        return nodes
    return NodeSet(tuple(nodes))


def chebyshev_coefficients(n: int) -> list[int]:
    """Exact integer coefficients of T_n, ascending degree."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [0] * (n + 1)
    half = n // 2
    for k in range(half + 1):
        inner = sum(math.comb(n, 2 * j) * math.comb(j, k) for j in range(k, half + 1))
        coeffs[n - 2 * k] = (-1) ** k * inner
    return coeffs


def chebyshev(n: int) -> Polynomial:
    """The degree-n Chebyshev polynomial of the first kind."""
    return Polynomial(tuple(float(c) for c in chebyshev_coefficients(n)), (n, 1.0))


def chebyshev_extrema(n: int) -> NodeSet:
    """The n+1 points ``cos(j pi / n)`` in ascending order on [-1, 1]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    xs = [math.cos(j * math.pi / n) for j in range(n, -1, -1)]
    # pin the exact values the cosine formula only approximates
    xs[0], xs[-1] = -1.0, 1.0
    if n % 2 == 0:
        xs[n // 2] = 0.0
    for j in range(1, (n + 1) // 2):
        xs[j] = -xs[n - j]
    return NodeSet(tuple(xs), (-1.0, 1.0), closed=True)


def _chebyshev_trig(n: int, x):
    x = np.asarray(x, dtype=float)
    inside = np.abs(x) <= 1.0
    out = np.empty_like(x)
    out[inside] = np.cos(n * np.arccos(x[inside]))
    xo = x[~inside]
    sign = np.where(xo < 0, (-1.0) ** n, 1.0)
    out[~inside] = sign * np.cosh(n * np.arccosh(np.abs(xo)))
    return out


def _chebyshev_recurrence(n: int, x):
    x = np.asarray(x, dtype=float)
    prev, cur = np.ones_like(x), x.copy()
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def evaluate(p: Polynomial, x):
    """Evaluate ``p`` at a scalar or array ``x``.

    Chebyshev-tagged polynomials use the recurrence (or the trigonometric
    form above ``COEFF_DEGREE_CAP``); everything else uses Horner's scheme.
    """
    if p.chebyshev_tag is not None:
        n, s = p.chebyshev_tag
        if n > COEFF_DEGREE_CAP:
            out = s * _chebyshev_trig(n, x)
        else:
            out = s * _chebyshev_recurrence(n, x)
        return float(out) if np.ndim(x) == 0 else out
    if np.ndim(x) == 0:
        acc = 0.0
        for c in reversed(p.coeffs):
            acc = acc * x + c
        return float(acc)
    x = np.asarray(x, dtype=float)
    acc = np.zeros_like(x)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def derivative(p: Polynomial, k: int = 1) -> Polynomial:
    """k-th formal derivative."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = list(p.coeffs)
    for _ in range(k):
        if len(cs) <= 1:
            return Polynomial((0.0,))
        cs = [i * cs[i] for i in range(1, len(cs))]
    return Polynomial(tuple(cs))


def phase_extrema(p: Polynomial) -> list[tuple[float, float]]:
    """Real critical points of ``p`` with their values, ascending in x."""
    dp = p.derivative()
    if dp.degree < 1:
        return []
    roots = np.roots(list(reversed(dp.coeffs)))
    real = sorted(float(r.real) for r in roots if abs(r.imag) < 1e-12 * max(1.0, abs(r)))
    return [(r, evaluate(p, r)) for r in real]

