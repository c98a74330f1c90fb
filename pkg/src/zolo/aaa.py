"""Greedy AAA fitting of sample data by a barycentric rational.

Supports the standard minimal-singular-vector weight choice and the
inverse-quadratic blend of all singular vectors, which is markedly more
robust for sign-like data.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .barycentric import BarycentricRational
from .linalg import blended_weight_vector, min_singular_vector, svd_right

__all__ = ["AaaOptions", "AaaReport", "aaa_fit"]


@dataclass(frozen=True)
class AaaOptions:
    degree: int = 12
    sign_blend: bool = True
    tolerance: float = 0.0

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        if self.tolerance < 0:
            raise ValueError("tolerance must be >= 0")


@dataclass
class AaaReport:
    fit: BarycentricRational
    error_history: list = field(default_factory=list)  # (degree, max abs error)
    final_error: float = 0.0
    support_indices: list = field(default_factory=list)


def aaa_fit(points, data, opts: AaaOptions) -> AaaReport:
    """Greedy AAA loop up to the requested degree.

    At each step the next support point is the sample of maximal current
    error; barycentric weights come from the SVD of the Loewner matrix over
    the remaining samples.
    """
    Z = np.asarray(points, dtype=complex).ravel()
    F = np.asarray(data, dtype=complex).ravel()
    if len(Z) != len(F):
        raise ValueError("points and data must have equal length")
    if len(Z) < opts.degree + 2:
        raise ValueError("need at least degree + 2 samples")
    if len(set(map(complex, Z))) != len(Z):
        raise ValueError("sample points must be pairwise distinct")
    if not (np.all(np.isfinite(Z)) and np.all(np.isfinite(F))):
        raise ValueError("non-finite samples")

    M = len(Z)
    active = np.ones(M, dtype=bool)   # samples not yet chosen as support
    support: list = []
    R = np.full(M, np.mean(F))
    history = []
    fit = None
    wj = None

    for m in range(opts.degree + 1):
        err_active = np.where(active, np.abs(F - R), -np.inf)
        j = int(np.argmax(err_active))  # lowest index wins ties
        support.append(j)
        active[j] = False

        zj = Z[support]
        fj = F[support]
        rows = np.nonzero(active)[0]
        C = 1.0 / (Z[rows, None] - zj[None, :])
        A = (F[rows, None] - fj[None, :]) * C
        if A.shape[0] < A.shape[1]:
            # too few free samples left to determine weights; stop early
            support.pop()
            break
        svd = svd_right(A)
        if opts.sign_blend and svd.singular_values[0] > 0:
            wj = blended_weight_vector(svd)
        else:
            wj = min_singular_vector(svd)

        num = C @ (wj * fj)
        den = C @ wj
        R = F.copy()  # interpolation at support points
        with np.errstate(divide="ignore", invalid="ignore"):
            R[rows] = num / den
        fit = BarycentricRational(zj, fj, wj)
        err = float(np.max(np.abs(F - R)))
        history.append((m, err))
        if err <= opts.tolerance or err == 0.0:
            break

    if fit is None:
        # degenerate call (degree 0 with a single step refused); constant fit
        fit = BarycentricRational(Z[support[:1]], F[support[:1]], np.array([1.0]))
        history.append((0, float(np.max(np.abs(F - fit.values[0])))))

    return AaaReport(fit=fit, error_history=history,
                     final_error=history[-1][1], support_indices=support)
