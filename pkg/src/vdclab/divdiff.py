"""Divided differences, mean-value coefficients and the minimal-node identity.

For ascending nodes ``x_0 < ... < x_n`` the n-th divided difference equals
``sum_j (-1)**(j+n) prod_{k != j} |x_k - x_j|**-1 f(x_j)``; on [-1, 1] the sum of
the unsigned weights is smallest (``2**(n-1)``) exactly at the Chebyshev
extrema.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import VerificationError
from .poly import NodeSet, as_nodeset, chebyshev_extrema
from .report import BoundReport

#: Above this order the weight products are accumulated in log space.
LOG_SPACE_ORDER = 12
SCAN_POINTS = 10 ** 4
BISECT_TOL = 1e-12
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class MeanValueCoefficients:
    """Weights ``c_j`` with ``f^(n)(zeta) = sum c_j f(x_j)`` for some zeta."""

    c: tuple[float, ...]
    nodes: NodeSet
    order: int

    def apply(self, f) -> float:
        return math.fsum(cj * float(f(x)) for cj, x in zip(self.c, self.nodes))


def _check_distinct(xs: np.ndarray) -> None:
    if xs.size > 1 and np.any(np.diff(np.sort(xs)) == 0):
        raise ValueError("nodes must be pairwise distinct")


def _log_gaps(xs: np.ndarray) -> np.ndarray:
    diff = np.abs(xs[None, :] - xs[:, None])
    np.fill_diagonal(diff, 1.0)
    if np.any(diff == 0):
        raise ValueError("nodes must be pairwise distinct")
    return np.log(diff).sum(axis=1)


def inverse_gaps(nodes) -> np.ndarray:
    """``prod_{k != j} |x_k - x_j|**-1`` for every j."""
    xs = as_nodeset(nodes).as_array()
    if xs.size - 1 > LOG_SPACE_ORDER:
        return np.exp(-_log_gaps(xs))
    diff = np.abs(xs[None, :] - xs[:, None])
    np.fill_diagonal(diff, 1.0)
    if np.any(diff == 0):
        raise ValueError("nodes must be pairwise distinct")
    return 1.0 / diff.prod(axis=1)


def divided_difference(f, nodes) -> float:
    """n-th divided difference by the recursive (Newton table) definition."""
    xs = as_nodeset(nodes).as_array()
    _check_distinct(xs)
    table = [float(f(x)) for x in xs]
    n = xs.size - 1
    for level in range(1, n + 1):
        for i in range(n - level + 1):
            table[i] = (table[i] - table[i + 1]) / (xs[i] - xs[i + level])
    return table[0]


def divided_difference_explicit(f, nodes) -> float:
    """n-th divided difference as the alternating weighted sum of values."""
    ns = as_nodeset(nodes)
    n = ns.order
    w = inverse_gaps(ns)
    terms = [(-1) ** (j + n) * w[j] * float(f(x)) for j, x in enumerate(ns.nodes)]
    return math.fsum(terms)


def mean_value_coefficients(nodes) -> MeanValueCoefficients:
    ns = as_nodeset(nodes)
    n = ns.order
    if n > LOG_SPACE_ORDER:
        w = np.exp(math.lgamma(n + 1) - _log_gaps(ns.as_array()))
    else:
        w = inverse_gaps(ns) * math.factorial(n)
    c = tuple(float((-1) ** (j + n) * wj) for j, wj in enumerate(w))
    return MeanValueCoefficients(c, ns, n)


def minimal_node_sum(nodes) -> float:
    """``sum_j prod_{k != j} |x_k - x_j|**-1`` for nodes inside [-1, 1]."""
    ns = as_nodeset(nodes)
    xs = ns.as_array()
    if xs[0] < -1.0 or xs[-1] > 1.0:
        raise ValueError("minimal_node_sum is normalised to [-1, 1]; rescale the nodes first")
    return math.fsum(inverse_gaps(ns))


def rescale_to_unit(nodes, a: float, b: float) -> NodeSet:
    """Affine map of nodes in ``[a, b]`` onto ``[-1, 1]``."""
    xs = as_nodeset(nodes).as_array()
    ys = np.clip((2.0 * xs - (a + b)) / (b - a), -1.0, 1.0)
    return NodeSet(tuple(ys), (-1.0, 1.0))


def uniqueness_probe(n: int, trials: int, perturbation: float, rng_seed: int) -> BoundReport:
    """Search random node sets in [-1, 1] for a sum below ``2**(n-1)``.

    Half the trials perturb the Chebyshev extrema by up to ``perturbation``
    per node, the other half draw nodes uniformly. Coincident draws are
    redrawn. The report's ``bound`` is the smallest sum seen, ``measured``
    the Chebyshev value, so ``passed`` means no trial beat the extrema.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if perturbation <= 0:
        raise ValueError("perturbation must be positive")
    rng = np.random.default_rng(rng_seed)
    eta = chebyshev_extrema(n).as_array()
    target = 2.0 ** (n - 1)
    best = math.inf
    best_nodes = None
    violations = 0
    near = 0
    for t in range(trials):
        while True:
            if t % 2 == 0:
                xs = np.clip(eta + rng.uniform(-perturbation, perturbation, n + 1), -1.0, 1.0)
            else:
                xs = rng.uniform(-1.0, 1.0, n + 1)
            xs.sort()
            if np.all(np.diff(xs) > 0):
                break
        s = math.fsum(inverse_gaps(NodeSet(tuple(xs), (-1.0, 1.0))))
        if np.max(np.abs(xs - eta)) <= 1e-9:
            near += 1
        elif s <= target - 1e-9:
            violations += 1
        if s < best:
            best, best_nodes = s, xs
    return BoundReport(
        name=f"chebyshev_extrema_unique_minimisers_n{n}",
        bound=best,
        measured=target,
        margin=best - target,
        passed=violations == 0,
        notes="smallest weight sum over random node sets versus 2^(n-1)",
        extra={"trials": trials, "violations": violations, "near_extrema_trials": near,
               "argmin_nodes": [float(x) for x in best_nodes]},
    )


def find_mean_value_point(f, f_n, nodes) -> float:
    """Locate zeta in ``(x_0, x_n)`` with ``f_n(zeta) = sum c_j f(x_j)``.

    Dense scan for a sign change of ``f_n - target`` followed by bisection.
    Raises :class:`VerificationError` when no witness is found, which means
    ``f_n`` is not the n-th derivative of ``f`` or ``f`` is not smooth enough.
    """
    coeffs = mean_value_coefficients(nodes)
    target = coeffs.apply(f)
    lo, hi = coeffs.nodes.nodes[0], coeffs.nodes.nodes[-1]
    if lo == hi:
        raise ValueError("need at least two nodes")
    grid = np.linspace(lo, hi, SCAN_POINTS + 2)[1:-1]
    resid = np.array([float(f_n(x)) - target for x in grid])
    small = np.flatnonzero(np.abs(resid) < RESIDUAL_TOL)
    if small.size:
        return float(grid[small[0]])
    flips = np.flatnonzero(np.sign(resid[:-1]) * np.sign(resid[1:]) < 0)
    if flips.size == 0:
        raise VerificationError(
            "no sign change of f_n - sum c_j f(x_j) on the node hull; "
            "is f_n really the n-th derivative of f?")
    k = flips[0]
    a, b = grid[k], grid[k + 1]
    ra = resid[k]
    while b - a > BISECT_TOL:
        m = 0.5 * (a + b)
        rm = float(f_n(m)) - target
        if rm == 0.0:
            return m
        if (rm < 0) == (ra < 0):
            a, ra = m, rm
        else:
            b = m
    za, zb = a, b
    return za if abs(float(f_n(za)) - target) <= abs(float(f_n(zb)) - target) else zb
