# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled grid kernels with compensated accumulation.

Same contract as ``orthokit._kernels_py``; see that module for the function
semantics.  Terms are summed in blocks of 128: block partials use plain
registers (cheap, pipelined), and the partials are folded together with
Kahan compensation, so accuracy stays at the compensated level for any
component count without numpy's temporaries.
"""

import numpy as np

cimport numpy as cnp

from libc.math cimport cos

cnp.import_array()

cdef extern from "math.h" nogil:
    void sincos(double x, double *s, double *c)

DEF BLOCK = 128


cdef inline void _kadd(double value, double *acc, double *comp) nogil:
    cdef double y = value - comp[0]
    cdef double t = acc[0] + y
    comp[0] = (t - acc[0]) - y
    acc[0] = t


def overlap_grid(weights, eigenvalues, gammas):
    cdef const double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef const double[::1] g = np.ascontiguousarray(eigenvalues, dtype=np.float64)
    cdef const double[::1] x = np.ascontiguousarray(gammas, dtype=np.float64)
    out = np.empty(x.shape[0], dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef Py_ssize_t i, k, b, n = w.shape[0], m = x.shape[0]
    cdef double gamma, s, c, bre, bim, re, im, cre, cim
    with nogil:
        for i in range(m):
            gamma = x[i]
            re = im = cre = cim = 0.0
            b = 0
            while b < n:
                bre = bim = 0.0
                for k in range(b, min(b + BLOCK, n)):
                    sincos(g[k] * gamma, &s, &c)
                    bre += w[k] * c
                    bim += w[k] * s
                _kadd(bre, &re, &cre)
                _kadd(bim, &im, &cim)
                b += BLOCK
            o[i] = re + 1j * im
    return out


def survival_grid(weights, eigenvalues, gammas):
    amp = overlap_grid(weights, eigenvalues, gammas)
    return amp.real**2 + amp.imag**2


def abs4_profile(lo_coefs, hi_coefs, thetas):
    lo = np.ascontiguousarray(lo_coefs, dtype=np.float64)
    hi = np.ascontiguousarray(hi_coefs, dtype=np.float64)
    cdef const double[::1] p = lo * lo + hi * hi
    cdef const double[::1] q = 2.0 * lo * hi
    cdef const double[::1] t = np.ascontiguousarray(thetas, dtype=np.float64)
    out = np.empty(t.shape[0], dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i, k, b, n = p.shape[0], m = t.shape[0]
    cdef double c, v, part, acc, comp
    with nogil:
        for i in range(m):
            c = cos(t[i])
            acc = comp = 0.0
            b = 0
            while b < n:
                part = 0.0
                for k in range(b, min(b + BLOCK, n)):
                    v = p[k] + q[k] * c
                    part += v * v
                _kadd(part, &acc, &comp)
                b += BLOCK
            o[i] = acc
    return out
