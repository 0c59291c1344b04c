import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vdclab import sublevel
from vdclab.exceptions import PreconditionError
from vdclab.poly import Polynomial, chebyshev


def test_constant_values():
    assert sublevel.sublevel_constant(1) == pytest.approx(2.0)
    assert sublevel.sublevel_constant(2) == pytest.approx(4.0)
    for n in range(1, 21):
        direct = (math.factorial(n) * 2 ** (2 * n - 1)) ** (1 / n)
        assert sublevel.sublevel_constant(n) == pytest.approx(direct, rel=1e-12)


def test_constant_le_two_n_and_ratio():
    assert all(sublevel.sublevel_constant(n) <= 2 * n for n in range(1, 1001))
    assert abs(sublevel.sublevel_constant(1000) / (4000 / math.e) - 1) < 5e-3
    # log-gamma path well past factorial overflow
    assert math.isfinite(sublevel.sublevel_constant(10 ** 5))


def test_gap_to_4n_over_e_follows_stirling():
    for n in (10, 100, 1000):
        gap = sublevel.sublevel_constant(n) - 4 * n / math.e
        predicted = (4 / math.e) * math.log(math.sqrt(2 * math.pi * n) / 2)
        assert gap == pytest.approx(predicted, rel=0.1)


def test_linear_measure_exact():
    m = sublevel.measure_sublevel(lambda x: 3 * x, -1.0, 1.0, 0.6)
    assert m.measure == pytest.approx(0.4, abs=1e-11)
    assert m.intervals[0] == pytest.approx((-0.2, 0.2), abs=1e-11)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_chebyshev_equality_case(n):
    lam = math.factorial(n) * 2 ** (n - 1)
    rep = sublevel.verify_sublevel(chebyshev(n), n, -1, 1, 1.0, lam)
    assert rep.measured == pytest.approx(2.0, abs=1e-6)
    assert rep.bound == pytest.approx(2.0, abs=1e-6)
    assert rep.passed


def test_precondition_is_checked():
    p = Polynomial((0, 0, 1))
    with pytest.raises(PreconditionError):
        sublevel.verify_sublevel(p, 2, -1, 1, 0.5, 3.0, f_n=p.derivative(2))


def test_auto_lambda():
    p = Polynomial((0, 0, 0, 1, 0.5))  # f'' = 6x + 6x^2, minimum |.| 0 at x = 0
    assert sublevel.auto_lambda(p, 2, -0.5, 0.5) == pytest.approx(0.0, abs=1e-9)
    assert sublevel.auto_lambda(p, 2, 0.5, 1.0) == pytest.approx(4.5, rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=2, max_size=6),
       st.lists(st.floats(0.01, 3.0), min_size=3, max_size=3))
def test_monotone_in_alpha(coeffs, alphas):
    p = Polynomial(tuple(coeffs))
    measures = [sublevel.measure_sublevel(p, -1, 1, a, 2000).measure for a in sorted(alphas)]
    assert all(b >= a - 1e-9 for a, b in zip(measures, measures[1:]))


def test_grid_refinement_stability():
    rng = np.random.default_rng(5)
    for _ in range(20):
        p = Polynomial(tuple(rng.normal(size=5)))
        lip = float(np.max(np.abs(p.derivative()(np.linspace(-1, 1, 1000)))))
        assert lip < 1e3
        grid = 2000
        m1 = sublevel.measure_sublevel(p, -1, 1, 0.5, grid).measure
        m2 = sublevel.measure_sublevel(p, -1, 1, 0.5, 2 * grid).measure
        assert abs(m1 - m2) < 10 * 2 / grid


def test_bound_fuzz():
    rng = np.random.default_rng(6)
    for _ in range(200):
        n = int(rng.integers(1, 7))
        p = Polynomial(tuple(rng.normal(size=n + 1)))
        lam = math.factorial(n) * abs(p.leading)
        rep = sublevel.verify_sublevel(p, n, -1, 1, float(rng.uniform(0.01, 2)), lam, 5000,
                                       f_n=p.derivative(n))
        assert rep.passed, rep


def test_invalid_arguments():
    with pytest.raises(ValueError):
        sublevel.measure_sublevel(np.sin, 1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        sublevel.measure_sublevel(np.sin, 0.0, 1.0, -1.0)
    with pytest.raises(ValueError), np.errstate(divide="ignore"):
        sublevel.measure_sublevel(lambda x: 1 / x, -1.0, 1.0, 1.0, 3)
