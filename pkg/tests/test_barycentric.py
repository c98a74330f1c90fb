import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zolo.barycentric import (BarycentricRational, evaluate, poles,
                              shift_values, zeros)


def identity_rational():
    # [DERIVED] nodes 0,1 / values 0,1 / weights 1,-1 gives r(z) = z:
    # num = -1/(z-1), den = 1/z - 1/(z-1) = -1/(z(z-1)), ratio = z
    return BarycentricRational([0.0, 1.0], [0.0, 1.0], [1.0, -1.0])


def reciprocal_rational():
    # [DERIVED] nodes 1,-1 / values 1,-1 / weights 1,1 gives r(z) = 1/z:
    # num = 2/(z^2-1), den = 2z/(z^2-1)
    return BarycentricRational([1.0, -1.0], [1.0, -1.0], [1.0, 1.0])


# ---------------------------------------------------------------------------
# construction and evaluation

def test_validation():
    with pytest.raises(ValueError):
        BarycentricRational([0.0, 0.0], [1.0, 2.0], [1.0, 1.0])  # repeated node
    with pytest.raises(ValueError):
        BarycentricRational([0.0, 1.0], [1.0], [1.0, 1.0])  # length mismatch
    with pytest.raises(ValueError):
        BarycentricRational([0.0], [1.0], [0.0])  # all-zero weights
    with pytest.raises(ValueError):
        BarycentricRational([], [], [])


def test_degree():
    assert identity_rational().degree == 1
    assert BarycentricRational([2.0], [5.0], [1.0]).degree == 0


def test_identity_rational_bitwise():
    r = identity_rational()
    for z in (2.0, 0.5, -1.0, 0.25):  # probes where the fp quotient is exact
        assert complex(r(z)) == complex(z)
    z = np.linspace(-3, 3, 101)
    assert np.allclose(r(z), z, atol=1e-14)


def test_reciprocal_rational_bitwise():
    r = reciprocal_rational()
    for z in (2.0, -1.0, -3.0):  # probes where the fp quotient is exact
        assert complex(r(z)) == complex(1.0 / z)
    z = np.linspace(2, 5, 50)
    assert np.allclose(r(z), 1.0 / z, rtol=1e-14)


def test_node_hits_return_values_exactly():
    r = BarycentricRational([0.0, 1.0, 2.0 + 1j], [3.0, -1.0, 5.0j],
                            [1.0, 2.0, -1.0])
    for t, f in zip(r.nodes, r.values):
        assert complex(r(t)) == complex(f)


def test_scalar_and_array_shapes():
    r = identity_rational()
    assert isinstance(r(2.0), complex)
    out = r(np.ones((3, 4)) * 2.0)
    assert out.shape == (3, 4)


def test_nonfinite_point_rejected():
    with pytest.raises(ValueError):
        evaluate(identity_rational(), np.inf)


def test_zero_weight_node_warns_and_recovers():
    r = BarycentricRational([0.0, 1.0], [0.0, 1.0], [1.0, 0.0])
    with pytest.warns(RuntimeWarning):
        out = r(1.0)
    assert np.isfinite(out)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_interpolation_property(m, seed):
    rng = np.random.default_rng(seed)
    nodes = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    values = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    weights = rng.standard_normal(m) + 0.1  # bounded away from zero
    r = BarycentricRational(nodes, values, weights)
    assert np.array_equal(r(nodes), r.values)


# ---------------------------------------------------------------------------
# poles, zeros, shifts

def test_poles_zeros_of_reciprocal():
    r = reciprocal_rational()
    p, z = poles(r), zeros(r)
    assert len(p) == 1 and abs(p[0]) < 1e-12
    assert len(z) == 0  # numerator is the constant 2 over the node polynomial


def test_shift_moves_zeros_keeps_poles():
    # [DERIVED] 1/z + 1 = (z+1)/z: zero at -1, pole at 0
    s = shift_values(reciprocal_rational(), 1.0)
    z, p = zeros(s), poles(s)
    assert len(z) == 1 and abs(z[0] + 1.0) < 1e-12
    assert len(p) == 1 and abs(p[0]) < 1e-12


def test_shift_identity_at_probes():
    rng = np.random.default_rng(7)
    nodes = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    r = BarycentricRational(nodes, rng.standard_normal(6),
                            rng.standard_normal(6) + 2.0)
    c = 0.7 - 0.3j
    s = shift_values(r, c)
    probes = rng.standard_normal(100) + 1j * rng.standard_normal(100)
    lhs, rhs = s(probes), r(probes) + c
    assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12)


def test_roots_of_fitted_polynomial_factors():
    # [DERIVED] r(z) = z via the 2-node identity, so r - c has the zero z = c
    for c in (0.5, -2.0, 1j):
        s = shift_values(identity_rational(), -c)
        z = zeros(s)
        assert len(z) == 1 and abs(z[0] - c) < 1e-12


def test_degree_zero_has_no_finite_roots():
    r = BarycentricRational([1.0], [2.0], [1.0])
    assert len(poles(r)) == 0 and len(zeros(r)) == 0


def test_pole_zero_residuals():
    # computed poles annihilate the denominator sum, zeros the numerator sum
    rng = np.random.default_rng(3)
    nodes = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    r = BarycentricRational(nodes, rng.standard_normal(5) + 1.0,
                            rng.standard_normal(5) + 2.0)

    def part_sum(coeffs, z):
        return np.sum(coeffs / (z - r.nodes))

    for z in poles(r):
        assert abs(part_sum(r.weights, z)) < 1e-8
    for z in zeros(r):
        assert abs(part_sum(r.weights * r.values, z)) < 1e-8
