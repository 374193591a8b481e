"""Full-rank square systems: the right-hand-side box mapped through A^-1.

For a square invertible A the solution set is the parallelepiped

    x = x_cr + sum_i c_i g_i,   c_i in the support of (f_i - b_cr_i)

where ``g_i`` is column i of A^-1, ``b_cr`` holds the core points of the
right-hand sides and ``x_cr = A^-1 b_cr``. Cutting every coefficient range
at level alpha gives the alpha-cut.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainViolation, NotSquare
from .fuzzy_num import FuzzyNumber, alpha_interval
from .mat_core import DEFAULT_TOL, invert
from .system import FuzzySystem


@dataclass(frozen=True, eq=False)
class Parallelepiped:
    """``center + c @ generators`` with ``c_i`` graded by ``coeff_bounds[i]``.

    ``generators`` is (k, n); for a square system k == n. ``lead`` lists the
    coordinates the generators span (all of them in the square case).
    ``b_cr[i]`` is the core point subtracted from right-hand side i.
    """

    center: np.ndarray
    generators: np.ndarray
    coeff_bounds: tuple[FuzzyNumber, ...]
    b_cr: np.ndarray
    lead: np.ndarray

    @property
    def dim(self) -> int:
        return self.generators.shape[0]


def centered_bounds(sys: FuzzySystem) -> tuple[np.ndarray, tuple[FuzzyNumber, ...]]:
    b_cr = sys.core_points()
    return b_cr, tuple(f.shifted(-c) for f, c in zip(sys.rhs, b_cr))


def solve_square(sys: FuzzySystem, tol: float = DEFAULT_TOL) -> Parallelepiped:
    if sys.m != sys.n:
        raise NotSquare(f"expected a square system, got {sys.m} x {sys.n}")
    A_inv = invert(sys.A, tol)
    b_cr, coeffs = centered_bounds(sys)
    return Parallelepiped(
        center=A_inv @ b_cr,
        generators=A_inv.T.copy(),
        coeff_bounds=coeffs,
        b_cr=b_cr,
        lead=np.arange(sys.n),
    )


def coefficient_intervals(sol: Parallelepiped, alpha: float) -> np.ndarray:
    """(k, 2) array of coefficient ranges at level alpha."""
    return np.array([alpha_interval(f, alpha) for f in sol.coeff_bounds]).reshape(-1, 2)


def alpha_cut_box(sol: Parallelepiped, alpha: float):
    if not 0.0 <= alpha <= 1.0:
        raise DomainViolation(f"alpha must lie in [0, 1], got {alpha}")
    return sol.center, sol.generators, coefficient_intervals(sol, alpha)


def corners(sol: Parallelepiped, alpha: float = 0.0) -> np.ndarray:
    """The 2**k corner points; bit j of the row index picks the upper end of c_j."""
    _, gens, iv = alpha_cut_box(sol, alpha)
    k = sol.dim
    bits = (np.arange(1 << k)[:, None] >> np.arange(k)) & 1
    coeffs = np.where(bits == 1, iv[:, 1], iv[:, 0])
    return sol.center + coeffs @ gens


def membership_box(sol: Parallelepiped, sys: FuzzySystem, x):
    """Membership through the generator frame: c = A x - b_cr, graded per coefficient."""
    x = np.asarray(x, dtype=np.float64)
    c = x @ sys.A.T - sol.b_cr
    grades = np.stack([f.membership(c[..., i]) for i, f in enumerate(sol.coeff_bounds)], axis=-1)
    mu = grades.min(axis=-1)
    return float(mu) if mu.ndim == 0 else mu


def box_coordinates(sol: Parallelepiped, X) -> np.ndarray:
    """Coefficients c with ``X[:, lead] == center[lead] + c @ generators[:, lead]``."""
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    frame = sol.generators[:, sol.lead]
    return np.linalg.solve(frame.T, (X[:, sol.lead] - sol.center[sol.lead]).T).T


def box_contains(sol: Parallelepiped, X, alpha: float, slack: float = 1e-9) -> np.ndarray:
    """Region test on the leading coordinates: every coefficient inside its alpha range."""
    iv = coefficient_intervals(sol, alpha)
    c = box_coordinates(sol, X)
    pad = slack * (1.0 + np.abs(iv))
    return np.all((c >= iv[:, 0] - pad[:, 0]) & (c <= iv[:, 1] + pad[:, 1]), axis=1)
