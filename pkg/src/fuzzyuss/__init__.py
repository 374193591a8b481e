"""United solution sets of linear systems with a fuzzy right-hand side.

Solves ``A x = B`` where ``A`` is a crisp m x n matrix and ``B`` a vector of
fuzzy numbers. The solution is a fuzzy set of vectors: a parallelepiped for
full-rank square systems, a polytope of band intersections when m > n, and
in general a polytope swept along the crisp null space of ``A``. Each point
is graded by the least membership of its equation residuals.
"""

from .errors import (
    DimensionCap,
    DimensionMismatch,
    DomainViolation,
    EmptyPolytope,
    FuzzySystemError,
    GridViolation,
    Inconsistent,
    MonotonicityViolation,
    NotSquare,
    OrderViolation,
    ParseError,
    RankDeficient,
    Singular,
    ValidationError,
    ZeroMatrix,
)
from .fuzzy_num import (
    FuzzyNumber,
    Kind,
    alpha_interval,
    make_piecewise_linear,
    make_triangular,
    membership_at,
    sample_parametric,
)
from .general import (
    GeneralSolution,
    alpha_cut,
    max_membership_general,
    membership_general,
    region_test,
    solve_general,
)
from .kernels import BACKEND
from .mat_core import CrispGeneralSolution, RankPartition, invert, rank_partition, solve_crisp_general
from .oracle import OracleReport, direct_membership, grid_compare
from .over import (
    GeneratorForm,
    Halfspace,
    PolytopeSolution,
    Sense,
    band_halfspaces,
    enumerate_vertices,
    max_membership,
    membership_over,
    parameterize,
    polytope_at_alpha,
)
from .square import Parallelepiped, alpha_cut_box, membership_box, solve_square
from .system import FuzzySystem
from .under import UnderdeterminedSolution, membership_under, solve_under

__version__ = "0.1.0"
