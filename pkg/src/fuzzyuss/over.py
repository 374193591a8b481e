"""Full-column-rank systems with m >= n: intersection of bands.

Equation i confines ``a_i . x`` to the alpha-cut of its right-hand side, a
band between two parallel hyperplanes. The alpha-cut of the solution set is
the intersection of the m bands, a convex polytope whose vertices are found
by intersecting n boundary hyperplanes taken from n distinct bands, for all
C(m, n) row subsets and all 2**n lower/upper choices, and keeping the
crossings that satisfy every band.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DimensionCap, DimensionMismatch, DomainViolation, EmptyPolytope, Inconsistent, RankDeficient
from .mat_core import DEFAULT_TOL, rank_partition
from .system import FuzzySystem

VERTEX_TOL = 1e-9
MAX_DIM = 8
MAX_SUBSETS = 10**6
MAX_BISECTIONS = 64


class Sense(enum.Enum):
    GE = ">="
    LE = "<="


@dataclass(frozen=True, eq=False)
class Halfspace:
    normal: np.ndarray
    offset: float
    sense: Sense

    def slack(self, X) -> np.ndarray:
        """Signed distance in ``normal . x`` units; nonnegative means satisfied."""
        v = np.asarray(X, dtype=np.float64) @ self.normal
        return v - self.offset if self.sense is Sense.GE else self.offset - v

    def __repr__(self) -> str:
        return f"Halfspace({self.normal.tolist()} . x {self.sense.value} {self.offset!r})"


def band_halfspaces(sys: FuzzySystem, alpha: float) -> list[Halfspace]:
    """Two halfspaces per equation, lower bound first."""
    if not 0.0 <= alpha <= 1.0:
        raise DomainViolation(f"alpha must lie in [0, 1], got {alpha}")
    lo, hi = sys.bounds(alpha)
    out = []
    for a, l, h in zip(sys.A, lo, hi):
        out.append(Halfspace(a, float(l), Sense.GE))
        out.append(Halfspace(a, float(h), Sense.LE))
    return out


def _split_bands(halfspaces: list[Halfspace], n: int):
    if len(halfspaces) % 2:
        raise DimensionMismatch("halfspaces must come in (lower, upper) pairs")
    lows, highs = halfspaces[0::2], halfspaces[1::2]
    for lo_h, hi_h in zip(lows, highs):
        if lo_h.sense is not Sense.GE or hi_h.sense is not Sense.LE or not np.array_equal(lo_h.normal, hi_h.normal):
            raise DimensionMismatch("each pair must be (normal . x >= lo, normal . x <= hi) with a shared normal")
    normals = np.array([h.normal for h in lows], dtype=np.float64).reshape(-1, n)
    return normals, np.array([h.offset for h in lows]), np.array([h.offset for h in highs])


def dedupe(points: np.ndarray, tol: float = VERTEX_TOL) -> np.ndarray:
    kept: list[np.ndarray] = []
    for p in points:
        radius = tol * (1.0 + np.linalg.norm(p))
        if not any(np.linalg.norm(p - q) <= radius for q in kept):
            kept.append(p)
    return np.array(kept).reshape(-1, points.shape[1])


def canonical_order(V: np.ndarray, coords=None) -> np.ndarray:
    """Counterclockwise from the lexicographically smallest vertex when the
    vertices live in a plane (``coords`` picks the two plane axes), otherwise
    plain lexicographic order."""
    V = np.asarray(V, dtype=np.float64)
    if len(V) <= 1:
        return V
    P = V if coords is None else V[:, coords]
    if P.shape[1] != 2:
        return V[np.lexsort(P.T[::-1])]
    c = P.mean(axis=0)
    order = np.argsort(np.arctan2(P[:, 1] - c[1], P[:, 0] - c[0]), kind="stable")
    start = int(np.lexsort((P[:, 1], P[:, 0]))[0])
    pos = int(np.flatnonzero(order == start)[0])
    return V[np.roll(order, -pos)]


def enumerate_vertices(halfspaces: list[Halfspace], n: int, tol: float = VERTEX_TOL) -> np.ndarray:
    """Vertices of the band intersection, deduplicated, canonically ordered."""
    normals, lo, hi = _split_bands(halfspaces, n)
    m = normals.shape[0]
    if n < 1:
        raise DimensionMismatch("need at least one unknown")
    if n > MAX_DIM or math.comb(m, n) > MAX_SUBSETS:
        raise DimensionCap(f"{m} bands in {n} dimensions exceeds the enumeration cap (n <= {MAX_DIM}, C(m, n) <= 1e6)")
    raw = kernels.scan_vertices(normals, lo, hi, DEFAULT_TOL, tol)
    if raw.size == 0:
        return np.empty((0, n))
    return canonical_order(dedupe(raw, tol))


@dataclass(frozen=True, eq=False)
class PolytopeSolution:
    vertices: np.ndarray
    halfspaces: tuple[Halfspace, ...]
    interior_point: np.ndarray
    alpha: float

    def contains(self, X, slack: float = VERTEX_TOL) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        ok = np.ones(len(X), dtype=bool)
        for h in self.halfspaces:
            ok &= h.slack(X) >= -slack * (1.0 + abs(h.offset))
        return ok

    def active_constraints(self, slack: float = VERTEX_TOL) -> list[list[int]]:
        """Indices into ``halfspaces`` that are tight at each vertex."""
        tight = np.array([np.abs(h.slack(self.vertices)) <= slack * (1.0 + abs(h.offset)) for h in self.halfspaces])
        return [np.flatnonzero(col).tolist() for col in tight.T]


def _polytope(sys: FuzzySystem, alpha: float) -> PolytopeSolution | None:
    halfspaces = band_halfspaces(sys, alpha)
    V = enumerate_vertices(halfspaces, sys.n)
    if len(V) == 0:
        return None
    return PolytopeSolution(V, tuple(halfspaces), V.mean(axis=0), float(alpha))


def _require_full_column_rank(sys: FuzzySystem, tol: float) -> None:
    k = rank_partition(sys.A, tol).k
    if k < sys.n:
        raise RankDeficient(f"rank {k} < {sys.n} unknowns; use the general solver")


def polytope_at_alpha(sys: FuzzySystem, alpha: float, tol: float = DEFAULT_TOL) -> PolytopeSolution | None:
    """Alpha-cut of the solution set, or None when it is empty."""
    _require_full_column_rank(sys, tol)
    return _polytope(sys, alpha)


@dataclass(frozen=True, eq=False)
class GeneratorForm:
    """``center + sum_i w_i * directions[i]`` with ``w >= 0`` and ``sum(w) <= 1``.

    Weights for a given point are not unique; membership in the set is
    decided by the polytope's halfspaces.
    """

    center: np.ndarray
    directions: np.ndarray
    polytope: PolytopeSolution

    def point(self, weights) -> np.ndarray:
        w = np.asarray(weights, dtype=np.float64)
        if w.shape != (len(self.directions),) or np.any(w < 0) or w.sum() > 1.0 + 1e-12:
            raise DomainViolation("weights must be nonnegative, one per vertex, summing to at most 1")
        return self.center + w @ self.directions

    def contains(self, X) -> np.ndarray:
        return self.polytope.contains(X)


def parameterize(p: PolytopeSolution | None, center=None) -> GeneratorForm:
    """Generator form around ``center`` (default: the polytope's interior point)."""
    if p is None:
        raise EmptyPolytope("cannot parameterize an empty solution set")
    c = p.interior_point if center is None else np.asarray(center, dtype=np.float64)
    return GeneratorForm(c, p.vertices - c, p)


def max_membership(sys: FuzzySystem, tol_alpha: float = 1e-6, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, float]:
    """Highest level with a nonempty cut, by bisection, and a point attaining it.

    The point is the vertex centroid of the last nonempty cut, so its
    membership is at least the returned level up to the vertex tolerance.
    """
    _require_full_column_rank(sys, tol)
    best = _polytope(sys, 0.0)
    if best is None:
        raise Inconsistent("the bands of the system do not intersect")
    top = _polytope(sys, 1.0)
    if top is not None:
        return top.interior_point, 1.0
    lo, hi = 0.0, 1.0
    for _ in range(MAX_BISECTIONS):
        if hi - lo <= tol_alpha:
            break
        mid = 0.5 * (lo + hi)
        p = _polytope(sys, mid)
        if p is None:
            hi = mid
        else:
            lo, best = mid, p
    return best.interior_point, lo


def membership_over(sys: FuzzySystem, x):
    return sys.membership(x)


def hull_contains(V, X, tol: float = VERTEX_TOL) -> np.ndarray:
    """Point-in-convex-hull test that uses the vertices only.

    Lower-dimensional hulls are handled by working in their affine span;
    points off the span are outside.
    """
    from scipy.spatial import ConvexHull

    V = np.atleast_2d(np.asarray(V, dtype=np.float64))
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    c = V.mean(axis=0)
    scale = 1.0 + float(np.max(np.abs(V)))
    eps = tol * scale
    _, s, vt = np.linalg.svd(V - c)
    d = int(np.sum(s > eps))
    D = X - c
    if d == 0:
        return np.linalg.norm(D, axis=1) <= eps
    basis = vt[:d]
    Q = D @ basis.T
    on_span = np.linalg.norm(D - Q @ basis, axis=1) <= eps
    W = (V - c) @ basis.T
    if d == 1:
        return on_span & (Q[:, 0] >= W[:, 0].min() - eps) & (Q[:, 0] <= W[:, 0].max() + eps)
    eq = ConvexHull(W).equations  # unit outward normals, normal . q + offset <= 0 inside
    return on_span & np.all(Q @ eq[:, :-1].T + eq[:, -1] <= eps, axis=1)
