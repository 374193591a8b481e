# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels. See ``_kernels_py`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, isnan, sqrt
from libc.stdlib cimport malloc, realloc, free

cnp.import_array()

cdef enum:
    MAXN = 8


def pl_membership(z, grid, lower, upper):
    cdef const double[::1] zv = np.ascontiguousarray(z, dtype=np.float64).ravel()
    cdef const double[::1] g = np.ascontiguousarray(grid, dtype=np.float64)
    cdef const double[::1] lw = np.ascontiguousarray(lower, dtype=np.float64)
    cdef const double[::1] up = np.ascontiguousarray(upper, dtype=np.float64)
    cdef Py_ssize_t npts = zv.shape[0], last = g.shape[0] - 1
    out_arr = np.empty(npts, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, a, b, mid, jl, ju
    cdef double x, rl, rh
    with nogil:
        for i in range(npts):
            x = zv[i]
            if isnan(x) or x < lw[0] or x > up[0]:
                out[i] = 0.0
                continue
            # last jl with lw[jl] <= x
            a = 0
            b = last + 1
            while b - a > 1:
                mid = (a + b) // 2
                if lw[mid] <= x:
                    a = mid
                else:
                    b = mid
            jl = a
            # last ju with up[ju] >= x
            a = 0
            b = last + 1
            while b - a > 1:
                mid = (a + b) // 2
                if up[mid] >= x:
                    a = mid
                else:
                    b = mid
            ju = a
            rl = 1.0
            if jl < last:
                rl = g[jl] + (x - lw[jl]) / (lw[jl + 1] - lw[jl]) * (g[jl + 1] - g[jl])
            rh = 1.0
            if ju < last:
                rh = g[ju] + (up[ju] - x) / (up[ju] - up[ju + 1]) * (g[ju + 1] - g[ju])
            out[i] = rl if rl < rh else rh
    return out_arr.reshape(np.shape(z))


cdef bint _factor(double* a, int* piv, int n, double* det) noexcept nogil:
    """In-place LU with partial pivoting on a row-major n x n block."""
    cdef int i, j, k, p
    cdef double best, t, d = 1.0
    for k in range(n):
        p = k
        best = fabs(a[k * n + k])
        for i in range(k + 1, n):
            t = fabs(a[i * n + k])
            if t > best:
                best = t
                p = i
        piv[k] = p
        if best == 0.0:
            det[0] = 0.0
            return False
        if p != k:
            for j in range(n):
                t = a[k * n + j]
                a[k * n + j] = a[p * n + j]
                a[p * n + j] = t
        d *= a[k * n + k]
        for i in range(k + 1, n):
            t = a[i * n + k] / a[k * n + k]
            a[i * n + k] = t
            for j in range(k + 1, n):
                a[i * n + j] -= t * a[k * n + j]
    det[0] = d
    return True


cdef void _solve(const double* a, const int* piv, int n, double* x) noexcept nogil:
    cdef int i, j
    cdef double t
    for i in range(n):
        if piv[i] != i:
            t = x[i]
            x[i] = x[piv[i]]
            x[piv[i]] = t
    for i in range(n):
        for j in range(i):
            x[i] -= a[i * n + j] * x[j]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            x[i] -= a[i * n + j] * x[j]
        x[i] /= a[i * n + i]


def scan_vertices(normals, lo, hi, double det_tol, double slack_tol):
    cdef const double[:, ::1] A = np.ascontiguousarray(normals, dtype=np.float64)
    cdef const double[::1] blo = np.ascontiguousarray(lo, dtype=np.float64)
    cdef const double[::1] bhi = np.ascontiguousarray(hi, dtype=np.float64)
    cdef int m = A.shape[0], n = A.shape[1]
    if n > MAXN:
        raise ValueError(f"compiled scan supports n <= {MAXN}")
    if n == 0 or m < n:
        return np.empty((0, n))

    cdef int rows[MAXN]
    cdef int piv[MAXN]
    cdef double lu[MAXN * MAXN]
    cdef double x[MAXN]
    cdef double det, hadamard, s, v
    cdef int i, j, q, mask, nmask = 1 << n
    cdef bint ok
    cdef Py_ssize_t count = 0, cap = 64
    cdef double* buf = <double*> malloc(cap * n * sizeof(double))
    cdef double* grown
    cdef double[:, ::1] ov
    cdef double[::1] row_norm = np.empty(m)
    cdef double[::1] lo_slack = np.empty(m)
    cdef double[::1] hi_slack = np.empty(m)
    if buf == NULL:
        raise MemoryError()

    for i in range(m):
        s = 0.0
        for j in range(n):
            s += A[i, j] * A[i, j]
        row_norm[i] = sqrt(s)
        lo_slack[i] = slack_tol * (1.0 + fabs(blo[i]))
        hi_slack[i] = slack_tol * (1.0 + fabs(bhi[i]))

    for j in range(n):
        rows[j] = j
    try:
        with nogil:
            while True:
                hadamard = 1.0
                for i in range(n):
                    hadamard *= row_norm[rows[i]]
                    for j in range(n):
                        lu[i * n + j] = A[rows[i], j]
                if _factor(lu, piv, n, &det) and fabs(det) > det_tol * hadamard:
                    for mask in range(nmask):
                        for j in range(n):
                            x[j] = bhi[rows[j]] if (mask >> j) & 1 else blo[rows[j]]
                        _solve(lu, piv, n, x)
                        ok = True
                        for i in range(m):
                            v = 0.0
                            for j in range(n):
                                v += A[i, j] * x[j]
                            if v < blo[i] - lo_slack[i] or v > bhi[i] + hi_slack[i]:
                                ok = False
                                break
                        if not ok:
                            continue
                        if count == cap:
                            grown = <double*> realloc(buf, 2 * cap * n * sizeof(double))
                            if grown == NULL:
                                with gil:
                                    raise MemoryError()
                            buf = grown
                            cap *= 2
                        for j in range(n):
                            buf[count * n + j] = x[j]
                        count += 1
                # next combination in lexicographic order
                q = n - 1
                while q >= 0 and rows[q] == m - n + q:
                    q -= 1
                if q < 0:
                    break
                rows[q] += 1
                for j in range(q + 1, n):
                    rows[j] = rows[j - 1] + 1

        out = np.empty((count, n), dtype=np.float64)
        ov = out
        for i in range(count):
            for j in range(n):
                ov[i, j] = buf[i * n + j]
        return out
    finally:
        free(buf)
