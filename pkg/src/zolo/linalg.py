"""Dense complex linear-algebra kernels.

Thin wrappers over LAPACK (via numpy/scipy) plus the inverse-quadratic
singular-vector blend used for sign-function fitting.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

__all__ = ["SvdResult", "svd_right", "min_singular_vector",
           "blended_weight_vector", "generalized_eigenvalues"]

# floor for tiny singular values in the inverse-quadratic blend,
# relative to the largest singular value
_BLEND_FLOOR = 1e-14


@dataclass(frozen=True)
class SvdResult:
    """Singular values (descending) and right singular vectors (columns)."""
    singular_values: np.ndarray
    right_vectors: np.ndarray


def svd_right(A) -> SvdResult:
    """Singular values and right singular vectors of a tall matrix."""
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    if A.size == 0:
        raise ValueError("svd_right: empty matrix")
    if not np.all(np.isfinite(A)):
        raise ValueError("svd_right: non-finite entries")
    if A.shape[0] < A.shape[1]:
        raise ValueError("svd_right: need at least as many rows as columns")
    _, s, Vh = np.linalg.svd(A, full_matrices=False)
    return SvdResult(s, Vh.conj().T)


def min_singular_vector(svd: SvdResult) -> np.ndarray:
    """Right singular vector of the smallest singular value."""
    return svd.right_vectors[:, -1]


def blended_weight_vector(svd: SvdResult) -> np.ndarray:
    """Unit-norm blend V @ (1/s^2) of all right singular vectors.

    Inverse-quadratic weighting biases strongly toward the minimal singular
    vector while keeping contributions from the full basis.  Singular values
    are floored at _BLEND_FLOOR times the largest to avoid overflow.
    """
    s = svd.singular_values
    if s[0] <= 0:
        raise ValueError("blended_weight_vector: all singular values are zero")
    s = np.maximum(s, _BLEND_FLOOR * s[0])
    w = svd.right_vectors @ (1.0 / s**2)
    return w / np.linalg.norm(w)


def generalized_eigenvalues(M, B) -> np.ndarray:
    """All finite generalized eigenvalues of the pencil (M, B).

    Eigenvalues at infinity (from a rank-deficient B) are excluded, as are
    numerically infinite ones beyond 1/sqrt(machine eps) relative to the
    pencil scale.
    """
    M = np.asarray(M, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if M.shape != B.shape or M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("generalized_eigenvalues: need square pencils of equal size")
    if not (np.all(np.isfinite(M)) and np.all(np.isfinite(B))):
        raise ValueError("generalized_eigenvalues: non-finite entries")
    lam = scipy.linalg.eigvals(M, B)
    lam = lam[np.isfinite(lam)]
    norm_M = np.linalg.norm(M)
    norm_B = np.linalg.norm(B)
    if norm_B > 0:
        cutoff = (1.0 + norm_M / norm_B) / np.sqrt(np.finfo(float).eps)
        lam = lam[np.abs(lam) <= cutoff]
    else:
        lam = lam[:0]
    return lam
