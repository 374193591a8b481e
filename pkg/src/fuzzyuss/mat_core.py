"""Dense crisp linear algebra: rank partition, inversion, general solution.

The rank partition orders the variables so that the leading (pivot) columns
come first and the free columns after them. Pivot columns are taken in
their natural left-to-right order, so when the leftmost columns are
independent they are the leading variables and the free variables get the
trailing slots, which is the usual reading of a general solution
``x = [K^-1 b; 0] + [-K^-1 G; I] p``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionMismatch, Inconsistent, Singular, ZeroMatrix

DEFAULT_TOL = 1e-10


def as_matrix(A) -> np.ndarray:
    A = np.array(A, dtype=np.float64)
    if A.ndim != 2 or A.size == 0:
        raise DimensionMismatch(f"expected a non-empty 2-D matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise DimensionMismatch("matrix entries must be finite")
    return A


@dataclass(frozen=True, eq=False)
class RankPartition:
    """``A[row_perm][:, col_perm] == [[K, G], [M, H]]`` with ``K`` k x k invertible."""

    k: int
    row_perm: np.ndarray
    col_perm: np.ndarray
    K: np.ndarray
    G: np.ndarray
    M: np.ndarray
    H: np.ndarray

    @property
    def lead(self) -> np.ndarray:
        return self.col_perm[: self.k]

    @property
    def free(self) -> np.ndarray:
        return self.col_perm[self.k :]

    @property
    def L(self) -> np.ndarray:
        return np.vstack([self.K, self.M])

    @property
    def R(self) -> np.ndarray:
        return np.vstack([self.G, self.H])


def rank_partition(A, tol: float = DEFAULT_TOL) -> RankPartition:
    """Gaussian elimination with row pivoting over columns in natural order.

    A column becomes a pivot when its largest remaining entry exceeds
    ``tol * max|A|``; otherwise it is free. Pivot rows are recorded in the
    order they were chosen.
    """
    A = as_matrix(A)
    if tol <= 0:
        raise ValueError("tol must be positive")
    m, n = A.shape
    scale = float(np.max(np.abs(A)))
    if scale == 0.0:
        raise ZeroMatrix("all entries are zero; rank is 0")

    W = A.copy()
    rows = np.arange(m)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        i = r + int(np.argmax(np.abs(W[r:, c])))
        if abs(W[i, c]) <= tol * scale:
            continue
        if i != r:
            W[[r, i]] = W[[i, r]]
            rows[[r, i]] = rows[[i, r]]
        factors = W[r + 1 :, c] / W[r, c]
        W[r + 1 :] -= np.outer(factors, W[r])
        pivots.append(c)
        r += 1

    k = r
    col_perm = np.array(pivots + [c for c in range(n) if c not in pivots], dtype=np.intp)
    P = A[rows][:, col_perm]
    return RankPartition(
        k=k,
        row_perm=rows,
        col_perm=col_perm,
        K=P[:k, :k],
        G=P[:k, k:],
        M=P[k:, :k],
        H=P[k:, k:],
    )


def invert(K, tol: float = DEFAULT_TOL) -> np.ndarray:
    K = as_matrix(K)
    if K.shape[0] != K.shape[1]:
        raise DimensionMismatch(f"cannot invert a non-square {K.shape} matrix")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)  # reported as Singular below
        lu, piv = scipy.linalg.lu_factor(K, check_finite=False)
    if np.min(np.abs(np.diag(lu))) <= tol * np.max(np.abs(K)):
        raise Singular("matrix is singular at the working tolerance")
    return scipy.linalg.lu_solve((lu, piv), np.eye(K.shape[0]), check_finite=False)


def null_basis(part: RankPartition, n: int) -> np.ndarray:
    """Rows span the null space; row j has a 1 in the j-th free slot."""
    k = part.k
    basis = np.zeros((n - k, n))
    if n == k:
        return basis
    coeffs = -invert(part.K) @ part.G  # k x (n - k)
    basis[:, part.lead] = coeffs.T
    basis[np.arange(n - k), part.free] = 1.0
    return basis


def lift(part: RankPartition, y, n: int) -> np.ndarray:
    """Place leading-variable coordinates into R^n with zero free variables."""
    y = np.asarray(y, dtype=np.float64)
    out = np.zeros(y.shape[:-1] + (n,))
    out[..., part.lead] = y
    return out


@dataclass(frozen=True, eq=False)
class CrispGeneralSolution:
    particular: np.ndarray
    null_basis: np.ndarray
    col_perm: np.ndarray


def solve_crisp_general(A, b, tol: float = DEFAULT_TOL) -> CrispGeneralSolution:
    A = as_matrix(A)
    b = np.asarray(b, dtype=np.float64)
    m, n = A.shape
    if b.shape != (m,):
        raise DimensionMismatch(f"right-hand side must have length {m}, got shape {b.shape}")
    part = rank_partition(A, tol)
    if rank_partition(np.column_stack([A, b]), tol).k > part.k:
        raise Inconsistent("right-hand side is not in the column space of A")
    y = invert(part.K, tol) @ b[part.row_perm[: part.k]]
    return CrispGeneralSolution(lift(part, y, n), null_basis(part, n), part.col_perm)
