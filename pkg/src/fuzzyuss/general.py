"""Systems of any shape and rank: fuzzy particular set plus crisp null space.

With rank k, the free variables are pinned to zero and the remaining m x k
system ``L y = B`` (all m rows, so dependent rows still constrain y) is
solved as a full-column-rank band intersection. The solution set is that
particular polytope, lifted into R^n, plus every combination of the null
space basis of A.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import Inconsistent
from .mat_core import DEFAULT_TOL, RankPartition, lift, null_basis, rank_partition
from .over import PolytopeSolution, _polytope, band_halfspaces, canonical_order, hull_contains, max_membership
from .square import Parallelepiped, box_contains, corners, solve_square
from .system import FuzzySystem
from .under import UnderdeterminedSolution, solve_under, strip_null, under_contains


@dataclass(frozen=True, eq=False)
class GeneralSolution:
    """``particular`` lives in R^n with zeros in the free slots."""

    particular: PolytopeSolution
    null_basis: np.ndarray
    col_perm: np.ndarray
    k: int
    case: str
    detail: Parallelepiped | UnderdeterminedSolution | None = None

    @property
    def lead(self) -> np.ndarray:
        return self.col_perm[: self.k]

    @property
    def free(self) -> np.ndarray:
        return self.col_perm[self.k :]


def classify(m: int, n: int, k: int) -> str:
    if k == m == n:
        return "square"
    if k == m < n:
        return "under"
    if k == n < m:
        return "over"
    return "general"


def _plane_coords(lead: np.ndarray):
    return lead if len(lead) == 2 else None


def _lifted_cut(sys: FuzzySystem, part: RankPartition, alpha: float) -> PolytopeSolution | None:
    sub = FuzzySystem(sys.A[:, part.lead], sys.rhs)
    p = _polytope(sub, alpha)
    if p is None:
        return None
    V = lift(part, p.vertices, sys.n)
    return PolytopeSolution(V, tuple(band_halfspaces(sys, alpha)), V.mean(axis=0), float(alpha))


def _box_cut(sys: FuzzySystem, box: Parallelepiped, alpha: float) -> PolytopeSolution:
    V = canonical_order(corners(box, alpha), _plane_coords(box.lead))
    return PolytopeSolution(V, tuple(band_halfspaces(sys, alpha)), V.mean(axis=0), float(alpha))


def solve_general(sys: FuzzySystem, tol: float = DEFAULT_TOL, dispatch: bool = True) -> GeneralSolution:
    """Solution set of any system.

    ``dispatch`` routes full-rank square and underdetermined systems to
    their closed-form solvers; the general path describes the same set.
    """
    part = rank_partition(sys.A, tol)
    case = classify(sys.m, sys.n, part.k)
    basis = null_basis(part, sys.n)

    if dispatch and case == "square":
        box = solve_square(sys, tol)
        return GeneralSolution(_box_cut(sys, box, 0.0), basis, part.col_perm, part.k, case, box)
    if dispatch and case == "under":
        under = solve_under(sys, tol)
        return GeneralSolution(_box_cut(sys, under.box, 0.0), under.null_basis, under.col_perm, part.k, case, under)

    particular = _lifted_cut(sys, part, 0.0)
    if particular is None:
        raise Inconsistent("the bands of the system do not intersect")
    return GeneralSolution(particular, basis, part.col_perm, part.k, case)


def alpha_cut(sys: FuzzySystem, sol: GeneralSolution, alpha: float, tol: float = DEFAULT_TOL) -> PolytopeSolution | None:
    """Particular part of the alpha-cut, lifted into R^n; None when empty."""
    if isinstance(sol.detail, Parallelepiped):
        return _box_cut(sys, sol.detail, alpha)
    if isinstance(sol.detail, UnderdeterminedSolution):
        return _box_cut(sys, sol.detail.box, alpha)
    return _lifted_cut(sys, rank_partition(sys.A, tol), alpha)


def region_test(sys: FuzzySystem, sol: GeneralSolution, alpha: float) -> Callable[[np.ndarray], np.ndarray]:
    """Vectorized membership test for the alpha-cut built from the geometry.

    Parallelepipeds are tested in their generator frame, polytopes against
    the convex hull of their vertices after removing the null-space part.
    """
    if isinstance(sol.detail, Parallelepiped):
        box = sol.detail
        return lambda X: box_contains(box, X, alpha)
    if isinstance(sol.detail, UnderdeterminedSolution):
        under = sol.detail
        return lambda X: under_contains(under, X, alpha)

    cut = alpha_cut(sys, sol, alpha)
    if cut is None:
        return lambda X: np.zeros(len(np.atleast_2d(X)), dtype=bool)
    lead = sol.lead
    V = cut.vertices[:, lead]

    def test(X):
        Xp = strip_null(sol.null_basis, sol.free, X)
        return hull_contains(V, Xp[:, lead])

    return test


def max_membership_general(
    sys: FuzzySystem, tol_alpha: float = 1e-6, tol: float = DEFAULT_TOL
) -> tuple[np.ndarray, float]:
    """Bisection on the leading-variable system, lifted with zero free variables."""
    part = rank_partition(sys.A, tol)
    y, level = max_membership(FuzzySystem(sys.A[:, part.lead], sys.rhs), tol_alpha, tol)
    return lift(part, y, sys.n), level


def membership_general(sys: FuzzySystem, x):
    return sys.membership(x)
