"""Full-rank underdetermined systems (m < n).

With the free variables pinned to zero the leading block ``K y = B`` is a
square fuzzy system; its parallelepiped, swept along the crisp null space of
A, is the whole solution set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, RankDeficient
from .mat_core import DEFAULT_TOL, invert, lift, null_basis, rank_partition
from .square import Parallelepiped, box_contains, centered_bounds
from .system import FuzzySystem


@dataclass(frozen=True, eq=False)
class UnderdeterminedSolution:
    box: Parallelepiped
    null_basis: np.ndarray
    col_perm: np.ndarray

    @property
    def free(self) -> np.ndarray:
        return self.col_perm[self.box.dim :]


def solve_under(sys: FuzzySystem, tol: float = DEFAULT_TOL) -> UnderdeterminedSolution:
    m, n = sys.m, sys.n
    if m >= n:
        raise DimensionMismatch(f"expected fewer equations than unknowns, got {m} x {n}")
    part = rank_partition(sys.A, tol)
    if part.k < m:
        raise RankDeficient(f"rank {part.k} < {m} equations; use the general solver")
    K_inv = invert(part.K, tol)
    # column j of K^-1 belongs to equation row_perm[j]; store generators by equation
    gens = np.empty((m, m))
    gens[part.row_perm] = K_inv.T
    b_cr, coeffs = centered_bounds(sys)
    box = Parallelepiped(
        center=lift(part, K_inv @ b_cr[part.row_perm], n),
        generators=lift(part, gens, n),
        coeff_bounds=coeffs,
        b_cr=b_cr,
        lead=part.lead,
    )
    return UnderdeterminedSolution(box, null_basis(part, n), part.col_perm)


def membership_under(sol: UnderdeterminedSolution, sys: FuzzySystem, x):
    # moving along the null space leaves A x unchanged, so grade A x directly
    return sys.membership(x)


def strip_null(null_basis: np.ndarray, free: np.ndarray, X) -> np.ndarray:
    """Remove the null-space component, leaving zeros in the free slots."""
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    return X - X[:, free] @ null_basis


def under_contains(sol: UnderdeterminedSolution, X, alpha: float) -> np.ndarray:
    return box_contains(sol.box, strip_null(sol.null_basis, sol.free, X), alpha)
