import math

import numpy as np
import pytest
from scipy import integrate as sp_integrate

from vdclab.exceptions import QuadratureError
from vdclab.quadrature import W7, W15, X15, integrate, integrate_panels


def test_rule_constants():
    assert W15.sum() == pytest.approx(2.0, abs=1e-14)
    assert W7.sum() == pytest.approx(2.0, abs=1e-14)
    # K15 integrates x^k exactly for k <= 22 (odd moments vanish by symmetry)
    for k in range(0, 23, 2):
        assert np.dot(W15, X15 ** k) == pytest.approx(2 / (k + 1), abs=1e-14)


@pytest.mark.parametrize("func, a, b", [
    (np.exp, 0.0, 1.0),
    (lambda x: np.sqrt(np.abs(x)), -1.0, 2.0),
    (lambda x: np.cos(30 * x) / (1 + x * x), -4.0, 4.0),
])
def test_against_scipy(func, a, b):
    ours, err = integrate(func, a, b, 1e-11)
    ref, _ = sp_integrate.quad(func, a, b, epsabs=1e-13, limit=500)
    assert abs(ours.real - ref) <= 1e-10
    assert err <= 1e-11


def test_complex_and_reversed():
    v, _ = integrate(lambda x: np.exp(1j * x), 0.0, math.pi)
    assert v == pytest.approx(2j, abs=1e-12)
    w, _ = integrate(lambda x: np.exp(1j * x), math.pi, 0.0)
    assert w == pytest.approx(-2j, abs=1e-12)


def test_scalar_callable_is_wrapped():
    v, _ = integrate(lambda x: math.sin(x), 0.0, math.pi)
    assert v.real == pytest.approx(2.0, abs=1e-12)


def test_panels_sum_to_whole():
    edges = np.linspace(0, 3, 7)
    vals, errs = integrate_panels(np.cos, edges, 1e-12)
    assert len(vals) == 6 and len(errs) == 6
    assert np.sum(vals).real == pytest.approx(math.sin(3.0), abs=1e-12)


def test_budget_exhaustion_raises():
    with pytest.raises(QuadratureError):
        integrate(lambda x: np.sin(1 / np.maximum(np.abs(x), 1e-300)), 0.0, 1.0, 1e-14,
                  max_panels=200)
