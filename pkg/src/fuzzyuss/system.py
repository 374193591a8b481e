"""A crisp matrix paired with a fuzzy right-hand side."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch
from .fuzzy_num import FuzzyNumber, alpha_interval
from .mat_core import as_matrix


@dataclass(frozen=True, eq=False)
class FuzzySystem:
    A: np.ndarray
    rhs: tuple[FuzzyNumber, ...]

    def __init__(self, A, rhs: Sequence[FuzzyNumber]):
        A = as_matrix(A)
        A.setflags(write=False)
        rhs = tuple(rhs)
        if len(rhs) != A.shape[0]:
            raise DimensionMismatch(f"{A.shape[0]} equations but {len(rhs)} right-hand sides")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "rhs", rhs)

    @property
    def m(self) -> int:
        return self.A.shape[0]

    @property
    def n(self) -> int:
        return self.A.shape[1]

    def bounds(self, alpha: float) -> tuple[np.ndarray, np.ndarray]:
        """Lower and upper ends of every right-hand side's alpha-cut."""
        cuts = np.array([alpha_interval(f, alpha) for f in self.rhs])
        return cuts[:, 0], cuts[:, 1]

    def core_points(self) -> np.ndarray:
        return np.array([f.core_point for f in self.rhs])

    def row_memberships(self, x) -> np.ndarray:
        """Per-equation membership of ``x``; shape (m,) or (N, m)."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape[-1] != self.n:
            raise DimensionMismatch(f"point has {x.shape[-1]} coordinates, system has {self.n} unknowns")
        lhs = x @ self.A.T
        return np.stack([f.membership(lhs[..., i]) for i, f in enumerate(self.rhs)], axis=-1)

    def membership(self, x):
        """Membership of ``x`` in the solution set: the least row membership."""
        mu = self.row_memberships(x).min(axis=-1)
        return float(mu) if mu.ndim == 0 else mu
