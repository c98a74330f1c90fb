"""Two-step pipeline for the extremal ratio problem.

Step 1 solves the sign problem (best uniform rational approximation of the
function -1 on E, +1 on F) by AAA with the singular-vector blend followed by
damped Lawson refinement.  Step 2 converts the sign approximant r_hat with
error tau into the ratio function

    r_star(z) = sqrt(sigma) * (p + r_hat(z)) / (p - r_hat(z)),

where sigma = (tau / (1 + sqrt(1 - tau^2)))^2 and p = (1 - sigma)/(1 + sigma).
r_star is as small as possible on E relative to its minimum modulus on F,
which the conversion normalizes to 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .aaa import AaaOptions, aaa_fit
from .barycentric import BarycentricRational, shift_values, zeros as bary_zeros
from .geometry import SampleSet
from .lawson import LawsonOptions, lawson_refine

__all__ = ["ProblemSpec", "Z4Solution", "Z3Solution", "SweepEntry",
           "solve_z4", "tau_to_sigma", "sigma_to_tau", "z4_to_z3",
           "solve", "degree_sweep"]

# samples whose error is within this factor of tau count as extremal
EXTREMAL_BAND = 0.99


@dataclass(frozen=True)
class ProblemSpec:
    samples: SampleSet
    degree: int = 12
    aaa_opts: Optional[AaaOptions] = None
    lawson_opts: Optional[LawsonOptions] = None

    def resolved_aaa_opts(self) -> AaaOptions:
        if self.aaa_opts is not None:
            return self.aaa_opts
        return AaaOptions(degree=self.degree)

    def resolved_lawson_opts(self) -> LawsonOptions:
        return self.lawson_opts if self.lawson_opts is not None else LawsonOptions()


@dataclass
class Z4Solution:
    r_hat: BarycentricRational
    tau: float
    error_curve: np.ndarray          # per-sample |r_hat(z) - sign(z)|
    extremal_points: np.ndarray
    samples: SampleSet
    tau_history: list = field(default_factory=list)
    aaa_history: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


@dataclass
class Z3Solution:
    r_hat: BarycentricRational
    sigma: float
    p: float
    poles: np.ndarray
    zeros: np.ndarray
    min_on_F: float
    max_on_E: float

    def __call__(self, z):
        q = self.r_hat(z)
        return math.sqrt(self.sigma) * (self.p + q) / (self.p - q)


def tau_to_sigma(tau: float) -> float:
    """Minimal ratio value from the minimal sign-approximation error."""
    if not (0 < tau <= 1):
        raise ValueError("tau must lie in (0, 1]")
    return (tau / (1 + math.sqrt(1 - tau * tau))) ** 2


def sigma_to_tau(sigma: float) -> float:
    """Inverse map: tau = 2*sqrt(sigma)/(1 + sigma)."""
    if not (0 < sigma <= 1):
        raise ValueError("sigma must lie in (0, 1]")
    return 2 * math.sqrt(sigma) / (1 + sigma)


def solve_z4(spec: ProblemSpec) -> Z4Solution:
    """Best-effort minimax sign approximant over the discrete samples."""
    points = spec.samples.points
    data = spec.samples.targets.astype(complex)
    report = aaa_fit(points, data, spec.resolved_aaa_opts())
    state = lawson_refine(report.fit, points, data, spec.resolved_lawson_opts())
    r_hat = state.fit
    error_curve = np.abs(r_hat(points) - data)
    tau = float(np.max(error_curve))
    warns = []
    if tau >= 1:
        warns.append(f"tau={tau:.3g}: degree too low to beat the trivial constant")
    extremal = points[error_curve >= EXTREMAL_BAND * tau]
    return Z4Solution(r_hat=r_hat, tau=tau, error_curve=error_curve,
                      extremal_points=extremal, samples=spec.samples,
                      tau_history=state.tau_history,
                      aaa_history=report.error_history, warnings=warns)


def z4_to_z3(z4: Z4Solution) -> Z3Solution:
    """Convert a sign solution to a ratio solution via the Moebius map."""
    if not z4.tau < 1:
        raise ValueError("conversion refused: tau >= 1 degenerates the Moebius map")
    sigma = tau_to_sigma(z4.tau)
    p = (1 - sigma) / (1 + sigma)
    # r_star vanishes where r_hat = -p and blows up where r_hat = +p
    zer = bary_zeros(shift_values(z4.r_hat, +p))
    pol = bary_zeros(shift_values(z4.r_hat, -p))
    sol = Z3Solution(r_hat=z4.r_hat, sigma=sigma, p=p, poles=pol, zeros=zer,
                     min_on_F=0.0, max_on_E=0.0)
    sol.min_on_F = float(np.min(np.abs(sol(z4.samples.points_F))))
    sol.max_on_E = float(np.max(np.abs(sol(z4.samples.points_E))))
    return sol


def solve(spec: ProblemSpec):
    """Full pipeline; the ratio solution is withheld when tau >= 1."""
    z4 = solve_z4(spec)
    if z4.tau >= 1:
        return z4, None
    return z4, z4_to_z3(z4)


@dataclass
class SweepEntry:
    degree: int
    tau: Optional[float]
    sigma: Optional[float]
    error: Optional[str] = None


def degree_sweep(samples: SampleSet, degrees, aaa_opts=None,
                 lawson_opts=None) -> list:
    """Independent solves per degree; per-degree failures are recorded."""
    degrees = list(degrees)
    if not degrees:
        raise ValueError("degree list must be nonempty")
    if degrees != sorted(degrees):
        raise ValueError("degrees must be ascending")
    entries = []
    for n in degrees:
        opts = aaa_opts
        if opts is not None:
            opts = AaaOptions(degree=n, sign_blend=opts.sign_blend,
                              tolerance=opts.tolerance)
        spec = ProblemSpec(samples=samples, degree=n, aaa_opts=opts,
                           lawson_opts=lawson_opts)
        try:
            z4 = solve_z4(spec)
        except Exception as exc:  # record, don't abort the sweep
            entries.append(SweepEntry(degree=n, tau=None, sigma=None,
                                      error=str(exc)))
            continue
        sigma = 1.0 if z4.tau >= 1 else tau_to_sigma(z4.tau)
        entries.append(SweepEntry(degree=n, tau=z4.tau, sigma=sigma))
    return entries
