"""Ground-truth membership and a grid harness to check solvers against it.

``direct_membership`` recomputes every row residual and grades it from the
raw right-hand-side data (closed form for triangular numbers, bisection on
the interpolated envelopes otherwise). It shares no code with the kernels
or the geometric solvers, so a solver bug cannot confirm itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionCap, DimensionMismatch
from .fuzzy_num import FuzzyNumber
from .system import FuzzySystem

BOUNDARY_BAND = 1e-7
MAX_GRID_DIM = 4
_BISECTIONS = 60


def _grade(f: FuzzyNumber, z: np.ndarray) -> np.ndarray:
    if f.tri is not None:
        l, m, r = f.tri
        out = np.zeros_like(z)
        rising = (z >= l) & (z < m)
        falling = (z > m) & (z <= r)
        out[rising] = (z[rising] - l) / (m - l)
        out[falling] = (r - z[falling]) / (r - m)
        out[z == m] = 1.0
        return out

    grid, lower, upper = f.grid, f.lower, f.upper
    inside = (z >= lower[0]) & (z <= upper[0])
    core = (z >= lower[-1]) & (z <= upper[-1])
    lo = np.zeros_like(z)
    hi = np.ones_like(z)
    for _ in range(_BISECTIONS):
        mid = 0.5 * (lo + hi)
        ok = (np.interp(mid, grid, lower) <= z) & (np.interp(mid, grid, upper) >= z)
        lo = np.where(ok, mid, lo)
        hi = np.where(ok, hi, mid)
    return np.where(core, 1.0, np.where(inside, lo, 0.0))


def _cut(f: FuzzyNumber, alpha: float) -> tuple[float, float]:
    if f.tri is not None:
        l, m, r = f.tri
        return l + alpha * (m - l), r - alpha * (r - m)
    return float(np.interp(alpha, f.grid, f.lower)), float(np.interp(alpha, f.grid, f.upper))


def direct_membership(sys: FuzzySystem, x):
    """Least membership over the equations of the residuals ``a_i . x``."""
    X = np.asarray(x, dtype=np.float64)
    if X.shape[-1] != sys.n:
        raise DimensionMismatch(f"point has {X.shape[-1]} coordinates, system has {sys.n} unknowns")
    flat = X.reshape(-1, sys.n)
    mu = np.ones(len(flat))
    for a, f in zip(sys.A, sys.rhs):
        mu = np.minimum(mu, _grade(f, flat @ a))
    return float(mu[0]) if X.ndim == 1 else mu.reshape(X.shape[:-1])


@dataclass(frozen=True)
class OracleReport:
    samples: int
    disagreements: int
    max_membership_gap: float
    worst_point: tuple[float, ...] | None
    excluded: int = 0

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "disagreements": self.disagreements,
            "excluded": self.excluded,
            "max_membership_gap": self.max_membership_gap,
            "worst_point": None if self.worst_point is None else list(self.worst_point),
        }


def grid_points(bbox, resolution) -> np.ndarray:
    bbox = np.asarray(bbox, dtype=np.float64).reshape(-1, 2)
    n = len(bbox)
    res = np.broadcast_to(np.asarray(resolution, dtype=int), (n,))
    if np.any(res < 2):
        raise ValueError("resolution must be at least 2 per axis")
    axes = [np.linspace(lo, hi, r) for (lo, hi), r in zip(bbox, res)]
    return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)


def grid_compare(
    sys: FuzzySystem,
    region_test: Callable[[np.ndarray], np.ndarray],
    bbox,
    resolution,
    alpha: float,
) -> OracleReport:
    """Compare a vectorized region test with the direct alpha-cut on a grid.

    ``region_test`` maps an (N, n) array to N booleans. The reference set is
    ``{membership >= alpha}``, or ``{membership > 0}`` at alpha = 0 (the
    support, whose closure is the zero cut). Points within 1e-7 of any cut
    boundary hyperplane are not counted.
    """
    if sys.n > MAX_GRID_DIM:
        raise DimensionCap(f"grid comparison supports n <= {MAX_GRID_DIM}, got {sys.n}")
    X = grid_points(bbox, resolution)
    if X.shape[1] != sys.n:
        raise DimensionMismatch(f"bbox has {X.shape[1]} axes, system has {sys.n} unknowns")

    mu = direct_membership(sys, X)
    expected = mu > 0.0 if alpha == 0.0 else mu >= alpha
    got = np.asarray(region_test(X), dtype=bool)

    dist = np.full(len(X), np.inf)
    for a, f in zip(sys.A, sys.rhs):
        norm = np.linalg.norm(a)
        if norm == 0.0:  # a zero row has no boundary in x
            continue
        lo, hi = _cut(f, alpha)
        v = X @ a
        dist = np.minimum(dist, np.minimum(np.abs(v - lo), np.abs(v - hi)) / norm)
    counted = dist >= BOUNDARY_BAND

    bad = counted & (expected != got)
    gap, worst = 0.0, None
    if bad.any():
        gaps = np.where(bad, np.abs(mu - alpha), -1.0)
        i = int(np.argmax(gaps))
        gap, worst = float(gaps[i]), tuple(float(v) for v in X[i])
    return OracleReport(
        samples=len(X),
        disagreements=int(bad.sum()),
        max_membership_gap=gap,
        worst_point=worst,
        excluded=int((~counted).sum()),
    )
