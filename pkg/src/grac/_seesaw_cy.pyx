# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of the pure-numpy see-saw kernel (see _seesaw.py).

Same contract, same update rule, same stopping logic; the batch is unrolled
into plain C loops per restart.  Keep the two files in lockstep.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

cdef double EPS = 1e-12


def run_seesaw(object signs_in, object dmat_in, object v0_in,
               int max_iters=10000, double tol=1e-10):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] signs = \
        np.ascontiguousarray(signs_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] dmat = \
        np.ascontiguousarray(dmat_in, dtype=np.float64)
    v0 = np.asarray(v0_in, dtype=np.float64)
    if v0.ndim == 2:
        v0 = v0[None]
    cdef cnp.ndarray[cnp.float64_t, ndim=3] v = \
        np.ascontiguousarray(v0).copy()

    cdef Py_ssize_t n_restarts = v.shape[0]
    cdef Py_ssize_t k = v.shape[1]
    cdef Py_ssize_t m = signs.shape[0]
    cdef double scale = 1.0 / (2.0 * m * k)

    cdef cnp.ndarray[cnp.float64_t, ndim=3] r = np.zeros((n_restarts, m, 3))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] values = np.full(n_restarts, -1.0)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] min_deltas = np.full(n_restarts, np.inf)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] iters = np.zeros(n_restarts, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] converged = \
        np.zeros(n_restarts, dtype=np.uint8)

    cdef cnp.ndarray[cnp.float64_t, ndim=2] big_v = np.zeros((m, 3))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] t = np.zeros((m, 3))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] w = np.zeros((k, 3))

    cdef Py_ssize_t rw, it, x, y, c, d
    cdef double acc, norm, value1, value2, prev, mind, d1, d2, improve
    cdef double u0, u1, u2

    for rw in range(n_restarts):
        prev = -1.0
        mind = np.inf
        it = 0
        for it in range(1, max_iters + 1):
            # V = signs @ v[rw]
            for x in range(m):
                for c in range(3):
                    acc = 0.0
                    for y in range(k):
                        acc += signs[x, y] * v[rw, y, c]
                    big_v[x, c] = acc
            # r-step: r_x along D^T V_x, then t_x = D r_x
            value1 = 0.0
            for x in range(m):
                u0 = big_v[x, 0] * dmat[0, 0] + big_v[x, 1] * dmat[1, 0] \
                    + big_v[x, 2] * dmat[2, 0]
                u1 = big_v[x, 0] * dmat[0, 1] + big_v[x, 1] * dmat[1, 1] \
                    + big_v[x, 2] * dmat[2, 1]
                u2 = big_v[x, 0] * dmat[0, 2] + big_v[x, 1] * dmat[1, 2] \
                    + big_v[x, 2] * dmat[2, 2]
                norm = sqrt(u0 * u0 + u1 * u1 + u2 * u2)
                if norm > EPS:
                    r[rw, x, 0] = u0 / norm
                    r[rw, x, 1] = u1 / norm
                    r[rw, x, 2] = u2 / norm
                for c in range(3):
                    acc = 0.0
                    for d in range(3):
                        acc += dmat[c, d] * r[rw, x, d]
                    t[x, c] = acc
                    value1 += acc * big_v[x, c]
            value1 = 0.5 + scale * value1
            # v-step: v_y along sum_x g[x,y] t_x
            value2 = 0.0
            for y in range(k):
                for c in range(3):
                    acc = 0.0
                    for x in range(m):
                        acc += signs[x, y] * t[x, c]
                    w[y, c] = acc
                norm = sqrt(w[y, 0] ** 2 + w[y, 1] ** 2 + w[y, 2] ** 2)
                if norm > EPS:
                    for c in range(3):
                        v[rw, y, c] = w[y, c] / norm
                for c in range(3):
                    value2 += v[rw, y, c] * w[y, c]
            value2 = 0.5 + scale * value2

            d1 = value1 - prev
            d2 = value2 - value1
            if d2 < d1:
                d1 = d2
            if d1 < mind:
                mind = d1
            improve = value2 - prev
            prev = value2
            if improve < tol:
                converged[rw] = 1
                break
        values[rw] = prev
        min_deltas[rw] = mind
        iters[rw] = it

    return values, iters, min_deltas, r, v, converged.astype(bool)
