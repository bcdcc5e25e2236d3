"""Numpy implementations of the grid kernels.

This is the fallback twin of the compiled extension ``orthokit._kernels``;
both expose the same three functions:

* ``overlap_grid``   -- weighted phasor sum  sum_k w_k exp(i g_k gamma)
* ``survival_grid``  -- squared modulus of the phasor sum
* ``abs4_profile``   -- sum_n (lo_n^2 + hi_n^2 + 2 lo_n hi_n cos(theta))^2

Below the compensation threshold the sums go through numpy (pairwise /
BLAS accumulation).  At or above it each point is reduced with chunked
exact summation so that million-component phasor sums keep ~1e-13 error,
mirroring the Kahan loops in the compiled kernel.
"""

from __future__ import annotations

import math

import numpy as np

# Component count at which plain accumulation is no longer trusted.
COMPENSATION_THRESHOLD = 10_000

_CHUNK = 4096          # terms folded into one partial before exact reduction
_BLOCK_ELEMS = 1 << 22  # cap on points*terms handled per broadcast block


def _exact_sum(values: np.ndarray) -> float:
    if values.size <= _CHUNK:
        return math.fsum(values)
    edges = np.arange(0, values.size, _CHUNK)
    return math.fsum(np.add.reduceat(values, edges))


def _blocks(n_terms: int, n_points: int):
    step = max(1, _BLOCK_ELEMS // max(n_terms, 1))
    for lo in range(0, n_points, step):
        yield lo, min(lo + step, n_points)


def overlap_grid(weights, eigenvalues, gammas) -> np.ndarray:
    w = np.ascontiguousarray(weights, dtype=np.float64)
    g = np.ascontiguousarray(eigenvalues, dtype=np.float64)
    x = np.ascontiguousarray(gammas, dtype=np.float64)
    out = np.empty(x.size, dtype=np.complex128)
    if w.size >= COMPENSATION_THRESHOLD:
        for i in range(x.size):
            ang = g * x[i]
            out[i] = complex(_exact_sum(w * np.cos(ang)), _exact_sum(w * np.sin(ang)))
        return out
    for lo, hi in _blocks(w.size, x.size):
        ang = np.outer(x[lo:hi], g)
        out[lo:hi] = np.cos(ang) @ w + 1j * (np.sin(ang) @ w)
    return out


def survival_grid(weights, eigenvalues, gammas) -> np.ndarray:
    amp = overlap_grid(weights, eigenvalues, gammas)
    return amp.real**2 + amp.imag**2


def abs4_profile(lo_coefs, hi_coefs, thetas) -> np.ndarray:
    """Quartic modulus sum of two real coefficient vectors mixed by a phase.

    Evaluates sum_n |lo_n + hi_n e^{i theta}|^4 for every theta.
    """
    lo = np.ascontiguousarray(lo_coefs, dtype=np.float64)
    hi = np.ascontiguousarray(hi_coefs, dtype=np.float64)
    t = np.ascontiguousarray(thetas, dtype=np.float64)
    p = lo * lo + hi * hi
    q = 2.0 * lo * hi
    out = np.empty(t.size, dtype=np.float64)
    if p.size >= COMPENSATION_THRESHOLD:
        for i in range(t.size):
            m = p + q * math.cos(t[i])
            out[i] = _exact_sum(m * m)
        return out
    for blo, bhi in _blocks(p.size, t.size):
        m = p[None, :] + np.outer(np.cos(t[blo:bhi]), q)
        out[blo:bhi] = np.einsum("ij,ij->i", m, m)
    return out
