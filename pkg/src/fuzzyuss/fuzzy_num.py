"""Fuzzy numbers in triangular and sampled parametric form.

A fuzzy number is stored through its two envelopes on a level grid
``0 = r_0 < r_1 < ... < r_K = 1``: ``lower`` is nondecreasing, ``upper`` is
nonincreasing and ``lower <= upper`` pointwise. Values between grid points
are linearly interpolated. A triangular number (l, m, r) is the one-segment
case ``grid = [0, 1]``, ``lower = [l, m]``, ``upper = [r, m]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import kernels
from .errors import DomainViolation, GridViolation, MonotonicityViolation, OrderViolation

MONOTONE_SLACK = 1e-12
DEFAULT_SAMPLES = 1001


class Kind(enum.Enum):
    TRIANGULAR = "tri"
    PIECEWISE_LINEAR = "pl"


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FuzzyNumber:
    kind: Kind
    grid: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    tri: tuple[float, float, float] | None = field(default=None)

    def __repr__(self) -> str:
        if self.tri is not None:
            return "FuzzyNumber(tri=({}, {}, {}))".format(*self.tri)
        return f"FuzzyNumber(pl, {self.grid.size} levels, support={self.support})"

    @property
    def support(self) -> tuple[float, float]:
        return float(self.lower[0]), float(self.upper[0])

    @property
    def core(self) -> tuple[float, float]:
        return float(self.lower[-1]), float(self.upper[-1])

    @property
    def core_point(self) -> float:
        """Representative crisp value: the peak, or the core midpoint."""
        if self.tri is not None:
            return self.tri[1]
        lo, hi = self.core
        return 0.5 * (lo + hi)

    def membership(self, z) -> np.ndarray:
        """Vectorized :func:`membership_at`."""
        return kernels.pl_membership(np.asarray(z, dtype=np.float64), self.grid, self.lower, self.upper)

    def shifted(self, delta: float) -> FuzzyNumber:
        """The same fuzzy number translated by ``delta``."""
        if self.tri is not None:
            l, m, r = self.tri
            return make_triangular(l + delta, m + delta, r + delta)
        return FuzzyNumber(
            Kind.PIECEWISE_LINEAR, self.grid, _frozen(self.lower + delta), _frozen(self.upper + delta)
        )

    def to_dict(self) -> dict:
        if self.tri is not None:
            return {"tri": list(self.tri)}
        return {"pl": {"r": self.grid.tolist(), "lower": self.lower.tolist(), "upper": self.upper.tolist()}}


def make_triangular(l: float, m: float, r: float) -> FuzzyNumber:
    l, m, r = float(l), float(m), float(r)
    if not all(np.isfinite((l, m, r))):
        raise OrderViolation(f"non-finite triangular number ({l}, {m}, {r})")
    if l > m or m > r:
        raise OrderViolation(f"triangular number needs l <= m <= r, got ({l}, {m}, {r})")
    return FuzzyNumber(Kind.TRIANGULAR, _frozen([0.0, 1.0]), _frozen([l, m]), _frozen([r, m]), (l, m, r))


def make_piecewise_linear(grid, lower, upper) -> FuzzyNumber:
    """Build a sampled fuzzy number, clamping monotonicity noise up to 1e-12."""
    grid = np.array(grid, dtype=np.float64)
    lower = np.array(lower, dtype=np.float64)
    upper = np.array(upper, dtype=np.float64)
    if grid.ndim != 1 or lower.shape != grid.shape or upper.shape != grid.shape:
        raise GridViolation(
            f"grid, lower and upper must be 1-D of equal length, got {grid.shape}, {lower.shape}, {upper.shape}"
        )
    if grid.size < 2:
        raise GridViolation("grid needs at least two levels")
    if not (np.all(np.isfinite(grid)) and np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
        raise GridViolation("grid and envelopes must be finite")
    if grid[0] != 0.0 or grid[-1] != 1.0:
        raise GridViolation(f"grid must start at 0 and end at 1, got [{grid[0]}, ..., {grid[-1]}]")
    if np.any(np.diff(grid) <= 0):
        raise GridViolation("grid must be strictly increasing")

    if np.diff(lower).min() < -MONOTONE_SLACK:
        j = int(np.argmin(np.diff(lower)))
        raise MonotonicityViolation(f"lower envelope decreases between levels {grid[j]} and {grid[j + 1]}")
    if np.diff(upper).max() > MONOTONE_SLACK:
        j = int(np.argmax(np.diff(upper)))
        raise MonotonicityViolation(f"upper envelope increases between levels {grid[j]} and {grid[j + 1]}")
    lower = np.maximum.accumulate(lower)
    if np.max(lower - upper) > MONOTONE_SLACK:
        j = int(np.argmax(lower - upper))
        raise MonotonicityViolation(f"lower envelope exceeds upper at level {grid[j]}")
    upper = np.maximum(upper, lower)
    upper = np.maximum.accumulate(upper[::-1])[::-1]
    return FuzzyNumber(Kind.PIECEWISE_LINEAR, _frozen(grid), _frozen(lower), _frozen(upper))


def sample_parametric(
    lower: Callable[[np.ndarray], np.ndarray],
    upper: Callable[[np.ndarray], np.ndarray],
    samples: int = DEFAULT_SAMPLES,
) -> FuzzyNumber:
    """Sample closed-form envelopes on a uniform level grid.

    The error of every derived quantity is the linear interpolation error of
    the envelopes on this grid.
    """
    r = np.linspace(0.0, 1.0, samples)
    return make_piecewise_linear(r, lower(r), upper(r))


def membership_at(f: FuzzyNumber, z: float) -> float:
    """Membership grade of ``z`` in ``f``.

    1 on the core, the inverse of the upper envelope to the right of it, the
    inverse of the lower envelope to the left, 0 outside the support. On a
    flat envelope segment the largest level of the flat range is returned.
    """
    return float(f.membership(np.array([z], dtype=np.float64))[0])


def alpha_interval(f: FuzzyNumber, alpha: float) -> tuple[float, float]:
    if not 0.0 <= alpha <= 1.0:
        raise DomainViolation(f"alpha must lie in [0, 1], got {alpha}")
    if f.tri is not None:
        l, m, r = f.tri
        return l + alpha * (m - l), r - alpha * (r - m)
    return float(np.interp(alpha, f.grid, f.lower)), float(np.interp(alpha, f.grid, f.upper))
