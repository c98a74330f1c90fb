"""Damped Lawson (IRLS) refinement of a barycentric fit toward minimax.

Support points stay fixed; numerator and denominator coefficients are re-solved
from a weighted linearized least-squares problem, and the sample weights are
updated from the current error magnitudes:

    w_new = ((1 - delta) + delta * |e| / max|e|) * w,   delta in (0, 1].

delta = 1 is the classical Lawson rule up to normalization; smaller delta
suppresses the period-2 weight oscillations that otherwise stall convergence.

Each step minimizes sum_j w_j |data_j * D(z_j) - N(z_j)|^2 over the numerator
and denominator coefficient vectors jointly, normalized to unit norm.  The
coefficients are taken from the inverse-square singular-value blend of the
right singular vectors rather than the minimal singular vector alone: for
two-level data the minimal vector collapses onto one-sided solutions whose
numerator and denominator agree up to sign (exact on one set, useless on the
other), and the blend is what keeps the solve on the two-sided branch.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .barycentric import BarycentricRational
from .linalg import blended_weight_vector, svd_right

__all__ = ["LawsonOptions", "LawsonState", "lawson_weight_update", "lawson_refine"]


@dataclass(frozen=True)
class LawsonOptions:
    steps: int = 200
    delta: float = 0.95

    def __post_init__(self):
        if not (0 < self.delta <= 1):
            raise ValueError("delta must lie in (0, 1]")
        if self.steps < 0:
            raise ValueError("steps must be >= 0")


@dataclass
class LawsonState:
    fit: BarycentricRational
    sample_weights: np.ndarray
    tau_history: list = field(default_factory=list)  # max abs error per step


def lawson_weight_update(weights, errors, delta: float) -> np.ndarray:
    """One application of the damped reweighting rule (no normalization)."""
    weights = np.asarray(weights, dtype=float)
    emax = float(np.max(np.abs(errors)))
    if emax == 0:
        return weights.copy()
    return ((1 - delta) + delta * np.abs(errors) / emax) * weights


def lawson_refine(fit: BarycentricRational, points, data,
                  opts: LawsonOptions) -> LawsonState:
    """Iteratively reweighted refinement; returns the best iterate by max error."""
    Z = np.asarray(points, dtype=complex).ravel()
    F = np.asarray(data, dtype=complex).ravel()
    if len(Z) != len(F):
        raise ValueError("points and data must have equal length")
    m = len(fit.nodes)
    wt = np.full(len(Z), 1.0 / len(Z))

    if opts.steps == 0:
        return LawsonState(fit=fit, sample_weights=wt, tau_history=[])
    if len(Z) < 2 * m:
        raise ValueError("fewer samples than free coefficients")

    dz = Z[:, None] - fit.nodes[None, :]
    hit = dz == 0
    node_rows = np.nonzero(hit.any(axis=1))[0]
    node_index = [int(np.nonzero(hit[j])[0][0]) for j in node_rows]
    with np.errstate(divide="ignore"):
        C = np.where(hit, 0.0, 1.0 / np.where(hit, 1.0, dz))

    best_fit = fit
    best_tau = float(np.max(np.abs(fit(Z) - F)))
    tau_history = []

    for _ in range(opts.steps):
        sw = np.sqrt(wt)
        A = np.concatenate([-sw[:, None] * C, (sw * F)[:, None] * C], axis=1)
        # rows at support points carry the limiting residual f_k*b_k - a_k
        for j, k in zip(node_rows, node_index):
            A[j, k] = -sw[j]
            A[j, m + k] = sw[j] * F[j]
        x = blended_weight_vector(svd_right(A))
        alpha, beta = x[:m], x[m:]
        with np.errstate(divide="ignore", invalid="ignore"):
            r = (C @ alpha) / (C @ beta)
            for j, k in zip(node_rows, node_index):
                r[j] = alpha[k] / beta[k]
        err = r - F
        if not np.all(np.isfinite(err)):
            continue  # degenerate iterate (vanishing denominator); skip
        tau = float(np.max(np.abs(err)))
        tau_history.append(tau)
        if tau < best_tau and np.all(beta != 0):
            best_fit = BarycentricRational(fit.nodes, alpha / beta, beta)
            best_tau = tau
        wt = lawson_weight_update(wt, err, opts.delta)
        total = wt.sum()
        if total <= 0 or not np.isfinite(total):
            break
        wt = wt / total

    return LawsonState(fit=best_fit, sample_weights=wt, tau_history=tau_history)
