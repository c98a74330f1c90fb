import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zolo.geometry import Circle, build_sample_set
from zolo.zolotarev import (ProblemSpec, Z4Solution, degree_sweep,
                            sigma_to_tau, solve, solve_z4, tau_to_sigma,
                            z4_to_z3)


def two_disks(count=80):
    return build_sample_set([Circle(-1, 0.5, count)], [Circle(1, 0.5, count)])


# ---------------------------------------------------------------------------
# tau <-> sigma

def test_tau_sigma_oracle_values():
    # [DERIVED] tau = 0.6: sigma = (0.6 / (1 + 0.8))^2 = 1/9
    assert np.isclose(tau_to_sigma(0.6), 1.0 / 9.0, rtol=1e-15)
    # [DERIVED] inverse: 2*sqrt(1/9)/(1 + 1/9) = 0.6
    assert np.isclose(sigma_to_tau(1.0 / 9.0), 0.6, rtol=1e-15)
    # [TRIVIAL] fixed point at 1
    assert tau_to_sigma(1.0) == 1.0
    assert sigma_to_tau(1.0) == 1.0


def test_tau_sigma_small_value_asymptotics():
    # [DERIVED] sigma ~ tau^2/4 for small tau
    t = 1e-8
    assert np.isclose(tau_to_sigma(t), t * t / 4, rtol=1e-12)


def test_tau_sigma_domain_errors():
    for bad in (0.0, -0.5, 1.0001, math.nan):
        with pytest.raises(ValueError):
            tau_to_sigma(bad)
        with pytest.raises(ValueError):
            sigma_to_tau(bad)


@settings(max_examples=200, deadline=None)
@given(st.floats(1e-14, 0.999))
def test_round_trip_property(tau):
    assert abs(sigma_to_tau(tau_to_sigma(tau)) - tau) <= 1e-12 * tau


# ---------------------------------------------------------------------------
# pipeline

def test_solve_z4_two_disks():
    z4 = solve_z4(ProblemSpec(samples=two_disks(), degree=6))
    assert 0 < z4.tau < 1e-2
    assert z4.warnings == []
    assert len(z4.error_curve) == 160
    assert np.isclose(np.max(z4.error_curve), z4.tau, rtol=1e-15)
    assert len(z4.extremal_points) >= 4
    assert len(z4.tau_history) > 0


def test_ratio_solution_matches_formula_and_is_normalized():
    samples = two_disks()
    z4, z3 = solve(ProblemSpec(samples=samples, degree=6))
    assert z3 is not None
    assert np.isclose(z3.sigma, tau_to_sigma(z4.tau), rtol=1e-15)
    assert np.isclose(z3.p, (1 - z3.sigma) / (1 + z3.sigma), rtol=1e-15)
    probes = np.array([0.5j, -0.3, 2.0 + 1j])
    q = z4.r_hat(probes)
    expected = math.sqrt(z3.sigma) * (z3.p + q) / (z3.p - q)
    assert np.allclose(z3(probes), expected, rtol=1e-14)
    # the conversion normalizes the minimum modulus on F to one
    assert 0.99 < z3.min_on_F < 1.01
    assert z3.max_on_E <= 1.01 * z3.sigma


def test_ratio_small_on_E_large_nowhere_on_F():
    samples = two_disks()
    _, z3 = solve(ProblemSpec(samples=samples, degree=6))
    assert np.max(np.abs(z3(samples.points_E))) < 1e-6
    assert np.min(np.abs(z3(samples.points_F))) >= 0.99


def test_zeros_and_poles_separate():
    samples = two_disks()
    _, z3 = solve(ProblemSpec(samples=samples, degree=6))
    # zeros cluster toward E (left), poles toward F (right)
    assert np.all(z3.zeros.real < 0)
    assert np.all(z3.poles.real > 0)
    assert len(z3.zeros) <= 6 and len(z3.poles) <= 6


def test_degenerate_degree_withholds_ratio_solution():
    z4, z3 = solve(ProblemSpec(samples=two_disks(), degree=0))
    assert z4.tau >= 1
    assert z3 is None
    assert len(z4.warnings) == 1


def test_conversion_refuses_large_tau():
    z4 = solve_z4(ProblemSpec(samples=two_disks(), degree=0))
    with pytest.raises(ValueError):
        z4_to_z3(z4)


def test_degree_sweep():
    entries = degree_sweep(two_disks(), [0, 2, 4, 6])
    assert [e.degree for e in entries] == [0, 2, 4, 6]
    assert all(e.error is None for e in entries)
    assert entries[0].sigma == 1.0  # constant fit cannot beat the trivial bound
    sig = [e.sigma for e in entries]
    assert sig == sorted(sig, reverse=True)  # monotone improvement
    for e in entries[1:]:
        assert np.isclose(e.sigma, tau_to_sigma(e.tau), rtol=1e-15)


def test_degree_sweep_requires_ascending_degrees():
    with pytest.raises(ValueError):
        degree_sweep(two_disks(), [4, 2])
    with pytest.raises(ValueError):
        degree_sweep(two_disks(), [])


def test_degree_sweep_records_failures():
    entries = degree_sweep(two_disks(count=10), [2, 40])  # 40 needs 42 samples
    assert entries[0].error is None
    assert entries[1].error is not None and entries[1].tau is None
