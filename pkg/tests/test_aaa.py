import numpy as np
import pytest

from zolo.aaa import AaaOptions, aaa_fit
from zolo.geometry import chebyshev_points, unit_circle_points


def test_options_validation():
    with pytest.raises(ValueError):
        AaaOptions(degree=-1)
    with pytest.raises(ValueError):
        AaaOptions(tolerance=-1e-3)


def test_input_validation():
    opts = AaaOptions(degree=2)
    with pytest.raises(ValueError):
        aaa_fit([1.0, 2.0], [1.0], opts)  # length mismatch
    with pytest.raises(ValueError):
        aaa_fit([1.0, 1.0, 2.0, 3.0], [1.0, 1.0, 2.0, 3.0], opts)  # duplicate
    with pytest.raises(ValueError):
        aaa_fit([1.0, 2.0, 3.0], [1.0, 2.0, 3.0], opts)  # too few samples
    with pytest.raises(ValueError):
        aaa_fit([1.0, 2.0, 3.0, 4.0], [1.0, np.inf, 2.0, 3.0], opts)


def test_degree_zero_constant_data():
    Z = np.linspace(0, 1, 10)
    rep = aaa_fit(Z, np.full(10, 2.5), AaaOptions(degree=0))
    assert rep.final_error == 0.0
    assert np.allclose(rep.fit(np.array([0.3, 0.9])), 2.5, atol=1e-15)


def test_greedy_picks_maximal_error_first():
    # mean of data is 2, so the sample farthest from 2 is taken first
    Z = np.array([0.0, 1.0, 2.0, 3.0])
    F = np.array([1.0, 1.0, 1.0, 5.0])
    rep = aaa_fit(Z, F, AaaOptions(degree=0))
    assert rep.support_indices[0] == 3


def test_exact_recovery_of_low_degree_rational():
    # [DERIVED] f = 1/(z - 3) is degree (0,1); degree-2 fit is exact
    Z = unit_circle_points(50)
    F = 1.0 / (Z - 3.0)
    rep = aaa_fit(Z, F, AaaOptions(degree=2, sign_blend=False))
    assert rep.final_error < 1e-12
    probes = 0.5 * unit_circle_points(17)
    assert np.allclose(rep.fit(probes), 1.0 / (probes - 3.0), rtol=1e-10)


def test_fit_interpolates_at_support_points():
    Z = chebyshev_points(-1.0, 1.0, 40)
    F = np.exp(Z)
    rep = aaa_fit(Z, F, AaaOptions(degree=6))
    for j in rep.support_indices:
        assert complex(rep.fit(Z[j])) == complex(F[j])


def test_error_history_shape_and_final_error():
    Z = chebyshev_points(-1.0, 1.0, 60)
    F = np.tanh(5 * Z)
    rep = aaa_fit(Z, F, AaaOptions(degree=8))
    assert len(rep.error_history) <= 9
    assert rep.error_history[-1][1] == rep.final_error
    degrees = [d for d, _ in rep.error_history]
    assert degrees == sorted(degrees)


def test_tolerance_stops_early():
    Z = chebyshev_points(-1.0, 1.0, 60)
    F = 1.0 / (Z + 2.0)
    rep = aaa_fit(Z, F, AaaOptions(degree=12, sign_blend=False, tolerance=1e-10))
    assert rep.final_error <= 1e-10
    assert rep.fit.degree < 12


def test_blend_handles_two_level_data():
    # two-level data with the blend: error well below the trivial constant
    Z = np.r_[unit_circle_points(40) - 2.0, unit_circle_points(40) + 2.0]
    F = np.r_[-np.ones(40), np.ones(40)].astype(complex)
    rep = aaa_fit(Z, F, AaaOptions(degree=8, sign_blend=True))
    assert rep.final_error < 0.05
    assert np.all(np.isfinite(rep.fit.weights))
