"""Rational functions in barycentric form.

r(z) = sum_k a_k/(z - t_k) / sum_k w_k/(z - t_k), with a_k = w_k * f_k.
The support points t_k are interpolation nodes, not poles; r takes the
limiting value f_k there whenever w_k != 0.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .linalg import generalized_eigenvalues

__all__ = ["BarycentricRational", "evaluate", "poles", "zeros", "shift_values"]


@dataclass(frozen=True)
class BarycentricRational:
    nodes: np.ndarray
    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        nodes = np.atleast_1d(np.asarray(self.nodes, dtype=complex))
        values = np.atleast_1d(np.asarray(self.values, dtype=complex))
        weights = np.atleast_1d(np.asarray(self.weights, dtype=complex))
        if not (len(nodes) == len(values) == len(weights)) or len(nodes) == 0:
            raise ValueError("nodes, values, weights must have equal nonzero length")
        if len(set(map(complex, nodes))) != len(nodes):
            raise ValueError("support points must be pairwise distinct")
        if not np.any(weights != 0):
            raise ValueError("at least one barycentric weight must be nonzero")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "weights", weights)

    @property
    def degree(self) -> int:
        return len(self.nodes) - 1

    def __call__(self, z):
        return evaluate(self, z)


def evaluate(r: BarycentricRational, z):
    """Evaluate the barycentric quotient; node hits return the limit value."""
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    zv = np.atleast_1d(z).ravel()
    if not np.all(np.isfinite(zv)):
        raise ValueError("evaluate: non-finite evaluation point")
    dz = zv[:, None] - r.nodes[None, :]
    hit = dz == 0
    out = np.empty(len(zv), dtype=complex)
    regular = ~hit.any(axis=1)
    if regular.any():
        with np.errstate(divide="ignore", invalid="ignore"):
            C = 1.0 / dz[regular]
        out[regular] = (C @ (r.weights * r.values)) / (C @ r.weights)
    for i in np.nonzero(~regular)[0]:
        k = int(np.nonzero(hit[i])[0][0])
        if r.weights[k] != 0:
            out[i] = r.values[k]
        else:
            # zero-weight node: the limit is not f_k; fall back to a nearby
            # evaluation and flag it
            warnings.warn("evaluation at a zero-weight support point; "
                          "using a perturbed point", RuntimeWarning)
            scale = max(abs(zv[i]), 1.0)
            out[i] = evaluate(r, zv[i] + 1e-9 * scale * (1 + 1j))
    if scalar:
        return complex(out[0])
    return out.reshape(np.shape(z))


def _partial_fraction_roots(nodes: np.ndarray, coeffs: np.ndarray,
                            companion_coeffs: np.ndarray) -> np.ndarray:
    """Finite roots of P(z) where sum_k coeffs_k/(z - t_k) = P(z)/prod(z - t_k).

    Uses the (n+2) x (n+2) arrowhead pencil.  A root falling on a support
    point is spurious when the node is inactive in both numerator and
    denominator (common factor); such roots are filtered out.
    """
    m = len(nodes)
    if m == 1:
        return np.empty(0, dtype=complex)
    M = np.zeros((m + 1, m + 1), dtype=complex)
    M[0, 1:] = coeffs
    M[1:, 0] = 1.0
    M[1:, 1:] = np.diag(nodes)
    B = np.eye(m + 1, dtype=complex)
    B[0, 0] = 0.0
    lam = generalized_eigenvalues(M, B)
    scale = np.max(np.abs(nodes)) + 1.0
    both_tiny = ((np.abs(coeffs) <= 1e-13 * max(np.max(np.abs(coeffs)), 1e-300))
                 & (np.abs(companion_coeffs)
                    <= 1e-13 * max(np.max(np.abs(companion_coeffs)), 1e-300)))
    keep = np.ones(len(lam), dtype=bool)
    for i, z in enumerate(lam):
        d = np.abs(z - nodes)
        k = int(np.argmin(d))
        if d[k] <= 1e-12 * scale and both_tiny[k]:
            keep[i] = False
    return lam[keep]


def poles(r: BarycentricRational) -> np.ndarray:
    """Finite zeros of the denominator sum_k w_k/(z - t_k)."""
    return _partial_fraction_roots(r.nodes, r.weights, r.weights * r.values)


def zeros(r: BarycentricRational) -> np.ndarray:
    """Finite zeros of the numerator sum_k w_k f_k/(z - t_k)."""
    return _partial_fraction_roots(r.nodes, r.weights * r.values, r.weights)


def shift_values(r: BarycentricRational, c: complex) -> BarycentricRational:
    """The rational function r + c, realized by shifting every node value.

    A degree-n interpolant is determined by its node values, so adding c to
    each f_k adds c to r everywhere.
    """
    return BarycentricRational(r.nodes, r.values + c, r.weights)
