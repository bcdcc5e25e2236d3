"""Speed bounds and orthogonality times along a generator orbit.

Two dimensional bounds constrain how fast a state can reach an orthogonal
one: pi/(2*(mean - ground)) from the mean energy above the ground component
and pi/(2*std) from the dispersion.  Equally-spaced, equally-weighted
superpositions reach orthogonality exactly at 2*pi/(spacing*count) and sweep
out a full orthonormal family before recurring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import InvalidCount, ZeroDispersion
from .evolution import evolve, inner_product
from .state import CombSpec, PureState, _frozen_array, g_statistics, make_comb

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

#: survival below this counts as orthogonal in first_orthogonality
DEFAULT_SURVIVAL_TOL = 1e-10

# grid points per bound-length in the coarse scan, and the cap on how many
# grid points one scan window may hold
_SCAN_PER_BOUND = 50
_WINDOW = 65536


@dataclass(frozen=True)
class BoundsReport:
    """The two speed bounds, their maximum, and whether they coincide."""

    ml_bound: float
    mt_bound: float
    gamma_min: float
    saturated: bool


@dataclass(frozen=True)
class CombRelations:
    """Dimensionless closed forms attached to a comb of a given count."""

    quotient: float
    g_ratio: float
    geometric_phase_s: float


@dataclass(frozen=True)
class OrthonormalFamily:
    """Comb orbit snapshots at multiples of gamma-tilde, plus their Gram matrix."""

    states: tuple[PureState, ...]
    gram: np.ndarray

    def __post_init__(self):
        gram = _frozen_array(self.gram, dtype=complex)
        n = len(self.states)
        if gram.shape != (n, n):
            raise ValueError(f"gram must be {n}x{n}, got {gram.shape}")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "states", tuple(self.states))


def gamma_tilde(spec: CombSpec) -> float:
    """First orthogonality parameter of a comb: 2*pi/(spacing*count)."""
    return 2.0 * math.pi / (spec.spacing * spec.count)


def period(spec: CombSpec) -> float:
    """Recurrence parameter of a comb: 2*pi/spacing (= count * gamma_tilde)."""
    return 2.0 * math.pi / spec.spacing


def bounds(state: PureState) -> BoundsReport:
    """Dimensional speed bounds for reaching an orthogonal state.

    Raises ZeroDispersion for single-component states, whose orbit never
    leaves the initial ray.
    """
    if state.count < 2:
        raise ZeroDispersion("single-component state never evolves")
    stats = g_statistics(state)
    ml = math.pi / (2.0 * stats.mean_above_ground)
    mt = math.pi / (2.0 * stats.std)
    gamma_min = max(ml, mt)
    return BoundsReport(
        ml_bound=ml,
        mt_bound=mt,
        gamma_min=gamma_min,
        saturated=abs(ml - mt) <= 1e-12 * gamma_min,
    )


def comb_relations(count: int) -> CombRelations:
    """Count-only closed forms for combs.

    * quotient: std over mean-above-ground, sqrt((n+1) / (3 (n-1)))
    * g_ratio: gamma_tilde over the dispersion bound, (2/sqrt(3)) sqrt(1 - 1/n^2)
    * geometric_phase_s: 2 * std * gamma_tilde, i.e. pi * g_ratio
    """
    if int(count) != count or count < 2:
        raise InvalidCount(f"comb needs an integer count >= 2, got {count!r}")
    n = int(count)
    quotient = math.sqrt((n + 1) / (3.0 * (n - 1)))
    g_ratio = 2.0 / math.sqrt(3.0) * math.sqrt((n * n - 1) / (n * n))
    return CombRelations(
        quotient=quotient,
        g_ratio=g_ratio,
        geometric_phase_s=math.pi * g_ratio,
    )


def _golden_min(f, a: float, b: float, xtol: float) -> float:
    h = b - a
    c = b - _INV_PHI * h
    d = a + _INV_PHI * h
    fc, fd = f(c), f(d)
    while h > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - _INV_PHI * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INV_PHI * h
            fd = f(d)
    return 0.5 * (a + b)


def first_orthogonality(
    state: PureState,
    gamma_max: float,
    survival_tol: float = DEFAULT_SURVIVAL_TOL,
) -> float | None:
    """Smallest gamma in (0, gamma_max] where the survival probability vanishes.

    The survival trace is scanned on a grid of ``mt_bound / 50`` steps; each
    local minimum is refined by golden-section search (bracket shrunk to
    1e-12 relative to the dispersion bound) and the first refined minimum
    with survival below ``survival_tol`` is returned.  Returns None when no
    such point exists up to gamma_max -- in particular for single-component
    states, which stay put forever.
    """
    if state.count < 2:
        return None
    if not gamma_max > 0:
        raise ValueError(f"gamma_max must be positive, got {gamma_max!r}")
    rep = bounds(state)
    step = rep.mt_bound / _SCAN_PER_BOUND
    xtol = 1e-12 * rep.gamma_min

    def f(x: float) -> float:
        return float(
            kernels.survival_grid(state.weights, state.eigenvalues, np.array([x]))[0]
        )

    # windowed scan so that a huge gamma_max never materializes a huge grid;
    # grid index i sits at gamma = i * step, and index total-1 already
    # reaches past gamma_max, so interior minima up to there cover (0, gamma_max]
    total = int(math.ceil(gamma_max / step)) + 1
    start = 1
    while start < total:
        stop = min(start + _WINDOW, total)
        idx = np.arange(start - 1, stop + 1)  # one extra point each side
        grid = idx * step
        vals = kernels.survival_grid(state.weights, state.eigenvalues, grid)
        for j in range(1, len(idx) - 1):
            if vals[j] <= vals[j - 1] and vals[j] <= vals[j + 1]:
                best = _golden_min(f, grid[j - 1], grid[j + 1], xtol)
                if f(best) < survival_tol and best <= gamma_max + xtol:
                    return min(best, gamma_max)
        start = stop
    return None


def orthonormal_family(spec: CombSpec) -> OrthonormalFamily:
    """All count snapshots of a comb orbit at multiples of gamma_tilde.

    Their Gram matrix is the identity (a comb sweeps out a full orthonormal
    family before the orbit recurs).
    """
    comb = make_comb(spec)
    gt = gamma_tilde(spec)
    states = tuple(evolve(comb, m * gt) for m in range(spec.count))
    gram = np.empty((spec.count, spec.count), dtype=complex)
    for i, si in enumerate(states):
        for j, sj in enumerate(states):
            gram[i, j] = inner_product(si, sj)
    return OrthonormalFamily(states=states, gram=gram)
