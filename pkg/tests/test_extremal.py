import math

import numpy as np
import pytest

from vdclab import extremal
from vdclab.poly import Polynomial


def test_circle_diameter():
    # f(x) = x traces a unit circle: the diameter is 2
    trace = extremal.trace_antiderivative(Polynomial((0, 1)), (0.0, 2 * math.pi), 401)
    res = extremal.max_chord(trace)
    assert res.objective == pytest.approx(2.0, abs=1e-10)
    a, b = res.endpoints
    assert abs((b - a) % (2 * math.pi) - math.pi) < 1e-4


def test_objective_matches_recomputed_chord():
    p = Polynomial((0, -1.2, 0, 1))
    res = extremal.cubic_chord(-1.2)
    a, b = res.endpoints
    assert extremal.chord_length(p, a, b) == pytest.approx(res.objective, abs=1e-8)
    assert res.diagnostics["objective_upper"] >= res.objective


def test_reparameterisation_stability():
    window = 6.0
    r1 = extremal.cubic_chord(-1.4, window_halfwidth=window, samples=601)
    r2 = extremal.cubic_chord(-1.4, window_halfwidth=window, samples=1201)
    assert abs(r1.objective - r2.objective) < 2 * window / 601 + r1.diagnostics["truncation_bound"]


@pytest.mark.parametrize("s", [0.5, 2.0, 5.0])
def test_cubic_scale_invariance(s):
    rng = np.random.default_rng(int(10 * s))
    a1, a3 = -float(rng.uniform(0.8, 2.0)), float(rng.uniform(0.5, 2.0))
    base = extremal.cubic_chord(a1, a3, window_halfwidth=6.0)
    scaled = extremal.cubic_chord(a1 * s, a3 * s ** 3, window_halfwidth=6.0 / s)
    assert base.objective * a3 ** (1 / 3) == pytest.approx(
        scaled.objective * (a3 * s ** 3) ** (1 / 3), abs=1e-6)
    assert np.allclose(np.array(scaled.endpoints) * s, base.endpoints, atol=1e-5)
    # the ratio a3 / a1^3 is unchanged exactly
    assert (a3 * s ** 3) / (a1 * s) ** 3 == pytest.approx(a3 / a1 ** 3, rel=1e-14)


def test_conjectured_constant():
    res = extremal.conjectured_n2_search()
    assert res.objective == pytest.approx(3.3643176, abs=1e-6)
    assert res.params[0] == pytest.approx(0.72664, abs=1e-4)
    assert 3.33346 <= res.objective <= 4.559014


def test_cubic_search():
    res = extremal.cubic_search()
    d = res.diagnostics
    assert res.params[0] == pytest.approx(-1.41260, abs=1e-4)
    assert d["ratio"] == pytest.approx(-0.3547, abs=1e-3)
    assert res.objective == pytest.approx(2.639667, abs=1e-5)
    # the (-3, 3) example rescaled to a3 = 1 cannot beat the optimum
    assert res.objective >= 4.61932 * (1 / 6) ** (1 / 3)
    assert d["phase_extrema"] == pytest.approx([0.64621, -0.64621], abs=1e-4)
    assert d["phase_extremum_closed_form"] == pytest.approx(abs(d["phase_extrema"][0]), rel=1e-9)
    assert d["extremum_mismatch"] > 0.05


def test_trace_rejects_flat_edges():
    with pytest.raises(ValueError):
        extremal.trace_antiderivative(Polynomial((0, 0, 1)), (0.0, 1.0), 10)
    with pytest.raises(ValueError):
        extremal.trace_antiderivative(Polynomial((0, 1)), (1.0, 0.0), 10)
