"""Pure numpy implementation of the hot kernels.

Mirrors ``_kernels.pyx`` signature for signature, including the order in
which candidate vertices are emitted, so the two backends are
interchangeable.
"""

from itertools import combinations

import numpy as np


def pl_membership(z, grid, lower, upper):
    """Membership of each value in ``z`` in a piecewise-linear fuzzy number.

    The envelopes are sampled on ``grid`` (0 = r_0 < ... < r_K = 1); ``lower``
    is nondecreasing and ``upper`` nonincreasing. The result is the largest
    level r whose interval [lower(r), upper(r)] still contains the value, so
    flat envelope segments resolve to the top of the flat range.
    """
    z_in = np.asarray(z, dtype=np.float64)
    z = z_in.ravel()
    grid = np.asarray(grid, dtype=np.float64)
    lower = np.asarray(lower, dtype=np.float64)
    upper = np.asarray(upper, dtype=np.float64)
    last = grid.size - 1

    # last j with lower[j] <= z, and last j with upper[j] >= z
    jl = np.searchsorted(lower, z, side="right") - 1
    ju = np.searchsorted(-upper, -z, side="right") - 1
    outside = (jl < 0) | (ju < 0) | np.isnan(z)

    r_lo = np.ones_like(z)
    on_lower = (jl >= 0) & (jl < last)
    j = jl[on_lower]
    zl = z[on_lower]
    r_lo[on_lower] = grid[j] + (zl - lower[j]) / (lower[j + 1] - lower[j]) * (grid[j + 1] - grid[j])

    r_hi = np.ones_like(z)
    on_upper = (ju >= 0) & (ju < last)
    j = ju[on_upper]
    zu = z[on_upper]
    r_hi[on_upper] = grid[j] + (upper[j] - zu) / (upper[j] - upper[j + 1]) * (grid[j + 1] - grid[j])

    out = np.minimum(r_lo, r_hi)
    out[outside] = 0.0
    return out.reshape(z_in.shape)


def scan_vertices(normals, lo, hi, det_tol, slack_tol):
    """Intersect every choice of n boundary hyperplanes from distinct bands.

    ``normals`` is (m, n); band i is ``lo[i] <= normals[i] @ x <= hi[i]``.
    For each n-subset of rows (lexicographic) and each of the 2**n ways of
    picking the lower or upper boundary (bit j set = upper bound of the j-th
    chosen row), the crossing point is kept when it satisfies every band
    within ``slack_tol * (1 + |bound|)``. Subsets whose determinant is at or
    below ``det_tol`` times the product of their row norms are skipped.

    Returns a (p, n) array of feasible points, duplicates included.
    """
    normals = np.ascontiguousarray(normals, dtype=np.float64)
    lo = np.ascontiguousarray(lo, dtype=np.float64)
    hi = np.ascontiguousarray(hi, dtype=np.float64)
    m, n = normals.shape
    row_norms = np.linalg.norm(normals, axis=1)
    lo_slack = slack_tol * (1.0 + np.abs(lo))
    hi_slack = slack_tol * (1.0 + np.abs(hi))

    masks = np.arange(1 << n)
    use_hi = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)  # (2**n, n)

    found = []
    for rows in combinations(range(m), n):
        rows = list(rows)
        sub = normals[rows]
        if abs(np.linalg.det(sub)) <= det_tol * np.prod(row_norms[rows]):
            continue
        rhs = np.where(use_hi, hi[rows], lo[rows])  # (2**n, n)
        pts = np.linalg.solve(sub, rhs.T).T
        vals = pts @ normals.T
        ok = np.all(vals >= lo - lo_slack, axis=1) & np.all(vals <= hi + hi_slack, axis=1)
        if ok.any():
            found.append(pts[ok])
    if not found:
        return np.empty((0, n))
    return np.vstack(found)
