"""States diagonal in a generator eigenbasis.

A pure state here is the triple (eigenvalues, weights, phases): the state is
sum_k sqrt(w_k) e^{i phi_k} |g_k>, so only strictly-increasing eigenvalues
with positive weights summing to one are representable.  Equally-weighted,
equally-spaced superpositions ("combs") get their own spec type because most
closed-form results attach to them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidCount,
    LengthMismatch,
    NonMonotoneEigenvalues,
    NonpositiveSpacing,
    NotNormalizable,
)

TWO_PI = 2.0 * np.pi

# make_state renormalizes anything whose weight sum is this close to one;
# the PureState constructor itself is strict.
_SANITIZE_TOL = 1e-9
_STRICT_TOL = 1e-12


def _frozen_array(values, dtype=float) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(values, dtype=dtype)).copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class PureState:
    """Immutable superposition over non-degenerate generator eigenvalues."""

    eigenvalues: np.ndarray
    weights: np.ndarray
    phases: np.ndarray

    def __post_init__(self):
        ev = _frozen_array(self.eigenvalues)
        w = _frozen_array(self.weights)
        ph = _frozen_array(np.mod(self.phases, TWO_PI))
        if not (ev.size == w.size == ph.size):
            raise LengthMismatch(
                f"got {ev.size} eigenvalues, {w.size} weights, {ph.size} phases"
            )
        if ev.size == 0:
            raise LengthMismatch("state needs at least one component")
        if ev.size > 1 and not np.all(np.diff(ev) > 0):
            raise NonMonotoneEigenvalues("eigenvalues must be strictly increasing")
        if np.any(w <= 0):
            raise NotNormalizable("weights must be strictly positive")
        total = float(np.sum(w))
        if abs(total - 1.0) > _STRICT_TOL:
            raise NotNormalizable(f"weights sum to {total!r}, expected 1")
        object.__setattr__(self, "eigenvalues", ev)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "phases", ph)

    @property
    def count(self) -> int:
        """Number of superposed eigencomponents."""
        return int(self.eigenvalues.size)


@dataclass(frozen=True)
class CombSpec:
    """Recipe for an equally-weighted superposition over an equally-spaced ladder.

    ``phases = None`` means all relative phases vanish.
    """

    count: int
    base: float = 0.0
    spacing: float = 1.0
    phases: np.ndarray | None = None

    def __post_init__(self):
        if int(self.count) != self.count or self.count < 2:
            raise InvalidCount(f"comb needs an integer count >= 2, got {self.count!r}")
        object.__setattr__(self, "count", int(self.count))
        object.__setattr__(self, "base", float(self.base))
        object.__setattr__(self, "spacing", float(self.spacing))
        if not self.spacing > 0:
            raise NonpositiveSpacing(f"spacing must be positive, got {self.spacing!r}")
        if self.phases is not None:
            ph = _frozen_array(self.phases)
            if ph.size != self.count:
                raise LengthMismatch(
                    f"got {ph.size} phases for a {self.count}-component comb"
                )
            object.__setattr__(self, "phases", ph)


@dataclass(frozen=True)
class GStatistics:
    """First two generator moments of a state, plus derived quantities."""

    mean: float
    second_moment: float
    std: float
    mean_above_ground: float


def make_state(eigenvalues, weights, phases=None) -> PureState:
    """Validate, prune and normalize raw component data into a PureState.

    Zero-weight entries are dropped, the rest renormalized; weight sums may
    deviate from one by up to 1e-9 before the input is rejected.  Negative
    weights and non-increasing eigenvalues are always rejected.
    """
    ev = np.atleast_1d(np.asarray(eigenvalues, dtype=float))
    w = np.atleast_1d(np.asarray(weights, dtype=float))
    if ev.size != w.size:
        raise LengthMismatch(f"got {ev.size} eigenvalues but {w.size} weights")
    if phases is None:
        ph = np.zeros(ev.size)
    else:
        ph = np.atleast_1d(np.asarray(phases, dtype=float))
        if ph.size != ev.size:
            raise LengthMismatch(f"got {ph.size} phases but {ev.size} eigenvalues")
    if ev.size == 0:
        raise LengthMismatch("state needs at least one component")
    if ev.size > 1 and not np.all(np.diff(ev) > 0):
        raise NonMonotoneEigenvalues("eigenvalues must be strictly increasing")
    if np.any(w < 0):
        raise NotNormalizable("weights must be nonnegative")
    total = float(np.sum(w))
    if abs(total - 1.0) > _SANITIZE_TOL:
        raise NotNormalizable(f"weights sum to {total!r}, expected 1 within 1e-9")
    keep = w > 0
    if not np.any(keep):
        raise NotNormalizable("all weights vanish")
    w = w[keep]
    return PureState(ev[keep], w / np.sum(w), ph[keep])


def make_comb(spec: CombSpec) -> PureState:
    """Realize a CombSpec as a PureState."""
    ev = spec.base + spec.spacing * np.arange(spec.count)
    w = np.full(spec.count, 1.0 / spec.count)
    ph = np.zeros(spec.count) if spec.phases is None else spec.phases
    return PureState(ev, w, ph)


def shannon_entropy(state: PureState) -> float:
    """Shannon entropy (nats) of the weight distribution."""
    w = state.weights
    return float(-np.dot(w, np.log(w)))


def g_statistics(state: PureState) -> GStatistics:
    """Mean, raw second moment, standard deviation and mean above the ground level.

    The variance is accumulated around the ground eigenvalue so that large
    common offsets in the spectrum do not cancel catastrophically.
    """
    g = state.eigenvalues
    w = state.weights
    ground = g[0]
    shifted = g - ground
    mean_above = float(np.dot(w, shifted))
    var = float(np.dot(w, (shifted - mean_above) ** 2))
    mean = ground + mean_above
    second = float(np.dot(w, g * g))
    return GStatistics(
        mean=mean,
        second_moment=second,
        std=float(np.sqrt(max(var, 0.0))),
        mean_above_ground=mean_above,
    )
