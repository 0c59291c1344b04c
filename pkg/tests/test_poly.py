import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vdclab.poly import (
    COEFF_DEGREE_CAP,
    NodeSet,
    Polynomial,
    chebyshev,
    chebyshev_coefficients,
    chebyshev_extrema,
    evaluate,
    phase_extrema,
)

coeff_lists = st.lists(st.floats(-10, 10, allow_nan=False), min_size=1, max_size=31)


@given(coeff_lists, st.floats(-2, 2))
def test_horner_matches_power_sum(coeffs, x):
    p = Polynomial(tuple(coeffs))
    direct = math.fsum(c * x ** k for k, c in enumerate(p.coeffs))
    scale = math.fsum(abs(c) * abs(x) ** k for k, c in enumerate(p.coeffs))
    assert abs(p(x) - direct) <= 1e-12 * max(scale, 1e-300)


@given(coeff_lists)
def test_degree_and_leading(coeffs):
    p = Polynomial(tuple(coeffs))
    assert p.degree == len(p.coeffs) - 1
    assert p.leading != 0.0 or p.is_zero()


def test_chebyshev_matches_trig_form():
    xs = np.random.default_rng(1).uniform(-1, 1, 200)
    for n in range(26):
        assert np.max(np.abs(evaluate(chebyshev(n), xs) - np.cos(n * np.arccos(xs)))) < 1e-9


def test_chebyshev_bounded_on_grid():
    grid = np.linspace(-1, 1, 10 ** 4)
    for n in range(26):
        assert np.max(np.abs(chebyshev(n)(grid))) <= 1 + 1e-12


def test_leading_coefficient_exact():
    assert chebyshev_coefficients(0) == [1]
    for n in range(1, 26):
        assert chebyshev_coefficients(n)[-1] == 2 ** (n - 1)


def test_known_low_degree():
    assert chebyshev_coefficients(3) == [0, -3, 0, 4]
    assert chebyshev_coefficients(4) == [1, 0, -8, 0, 8]


@pytest.mark.parametrize("n", [1, 2, 3, 7, 12, 25, 40])
def test_alternation(n):
    eta = chebyshev_extrema(n)
    assert eta.nodes[0] == -1.0 and eta.nodes[-1] == 1.0
    for j, x in enumerate(eta):
        assert abs(chebyshev(n)(x) - (-1) ** (j + n)) <= 1e-12


def test_high_degree_uses_trig_path():
    n = COEFF_DEGREE_CAP + 10
    xs = np.linspace(-1, 1, 101)
    assert np.allclose(chebyshev(n)(xs), np.cos(n * np.arccos(xs)), atol=1e-12)
    assert chebyshev(n).scaled(0.5)(0.3) == pytest.approx(0.5 * math.cos(n * math.acos(0.3)))


def test_derivative_and_add():
    p = Polynomial((1, 2, 3))
    assert p.derivative().coeffs == (2.0, 6.0)
    assert p.derivative(5).is_zero()
    assert (p + Polynomial((0, 0, -3))).degree == 1


def test_parse():
    assert Polynomial.parse("0, 0, 0.5").coeffs == (0.0, 0.0, 0.5)
    for bad in ("", "1,,2", "a,b", "1,"):
        with pytest.raises(ValueError):
            Polynomial.parse(bad)


def test_nodeset_validation():
    with pytest.raises(ValueError):
        NodeSet((0.0, 0.0))
    with pytest.raises(ValueError):
        NodeSet((1.0, 0.0))
    with pytest.raises(ValueError):
        NodeSet((-1.0, 1.0), (-1.0, 1.0), closed=False)
    ns = NodeSet((-0.5, 0.5), (-1.0, 1.0), closed=False)
    assert ns.order == 1 and len(ns) == 2


def test_phase_extrema_of_cubic():
    ext = phase_extrema(Polynomial((0, -3, 0, 1)))
    assert [round(x, 12) for x, _ in ext] == [-1.0, 1.0]
    assert [round(v, 12) for _, v in ext] == [2.0, -2.0]


@settings(max_examples=50)
@given(st.integers(1, 25))
def test_extrema_symmetric_and_increasing(n):
    xs = chebyshev_extrema(n).as_array()
    assert np.all(np.diff(xs) > 0)
    assert np.array_equal(xs, -xs[::-1])
