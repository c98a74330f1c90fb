"""Log-magnitude and sign-distance fields on rectangular grids.

The grids are the raw data behind contour plots of |r(z)| levels; values are
log10 magnitudes clamped to a finite range so downstream arithmetic never
sees infinities.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .barycentric import BarycentricRational
from .geometry import SampleSet

__all__ = ["FieldGrid", "magnitude_field", "sign_distance_fields",
           "capacity_bound", "default_bbox", "grid_csv_lines"]

CLAMP = 300.0


@dataclass
class FieldGrid:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int
    values: np.ndarray       # shape (nx, ny); values[i, j] at (x_i, y_j)
    clamped_count: int = 0

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.nx)

    @property
    def y(self) -> np.ndarray:
        return np.linspace(self.y_min, self.y_max, self.ny)


def _validate_bbox(bbox, nx, ny):
    x0, x1, y0, y1 = map(float, bbox)
    if not (x0 < x1 and y0 < y1):
        raise ValueError("bbox must satisfy x_min < x_max and y_min < y_max")
    if nx < 2 or ny < 2:
        raise ValueError("grid resolution must be at least 2 x 2")
    return x0, x1, y0, y1


def magnitude_field(fun, bbox, nx: int, ny: int) -> FieldGrid:
    """Grid of log10|fun(z)| over the bounding box, clamped to +-CLAMP."""
    x0, x1, y0, y1 = _validate_bbox(bbox, nx, ny)
    x = np.linspace(x0, x1, nx)
    y = np.linspace(y0, y1, ny)
    zz = x[:, None] + 1j * y[None, :]
    vals = np.asarray(fun(zz.ravel()), dtype=complex).reshape(nx, ny)
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.log10(np.abs(vals))
    logs = np.where(np.isnan(logs), CLAMP, logs)  # NaN only from inf/inf at poles
    clamped = int(np.count_nonzero((logs < -CLAMP) | (logs > CLAMP)))
    logs = np.clip(logs, -CLAMP, CLAMP)
    return FieldGrid(x0, x1, y0, y1, nx, ny, logs, clamped)


def sign_distance_fields(r_hat: BarycentricRational, bbox, nx: int, ny: int):
    """Grids of log10|r_hat(z) - 1| and log10|r_hat(z) + 1| (distances to the
    two sign levels)."""
    to_plus = magnitude_field(lambda z: r_hat(z) - 1.0, bbox, nx, ny)
    to_minus = magnitude_field(lambda z: r_hat(z) + 1.0, bbox, nx, ny)
    return to_plus, to_minus


def capacity_bound(n: int, cap: float) -> float:
    """Potential-theory lower bound exp(-n/cap) for the optimal ratio value."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if not cap > 0:
        raise ValueError("capacity must be positive")
    return float(np.exp(-n / cap))


def default_bbox(samples: SampleSet, pad: float = 0.2):
    """Samples' bounding box padded by a fraction of its larger extent."""
    pts = samples.points
    x0, x1 = float(np.min(pts.real)), float(np.max(pts.real))
    y0, y1 = float(np.min(pts.imag)), float(np.max(pts.imag))
    margin = pad * max(x1 - x0, y1 - y0, 1e-3)
    return (x0 - margin, x1 + margin, y0 - margin, y1 + margin)


def grid_csv_lines(grid: FieldGrid, fmt: str = "%.17g") -> list:
    """One CSV line per grid row (fixed y, x varying across columns)."""
    lines = []
    for j in range(grid.ny):
        lines.append(",".join(fmt % v for v in grid.values[:, j]))
    return lines
