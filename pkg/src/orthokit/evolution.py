"""Orbit of a state under its generator: overlaps, survival, phasor picture.

Evolution only rotates component phases, phi_k -> phi_k - g_k * gamma, so the
overlap with the initial state is the weighted phasor sum
sum_k w_k exp(i g_k gamma) -- initial phases drop out.  Everything in this
module is a view on that sum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import EmptyGrid, LengthMismatch
from .state import PureState, _frozen_array

QUANTITIES = ("survival", "relative_entropy", "resultant_norm", "concurrence")


@dataclass(frozen=True)
class Distinguishability:
    """Survival probability and its complement at one point of the orbit."""

    survival: float
    relative_entropy: float


@dataclass(frozen=True)
class PhasorDiagram:
    """Planar phasor decomposition of the overlap at a fixed gamma.

    Row k of ``vectors`` is the weight-w_k phasor at angle g_k * gamma;
    ``resultant`` is their componentwise sum and equals the overlap.
    """

    vectors: np.ndarray
    resultant: np.ndarray
    gamma: float

    def __post_init__(self):
        vec = _frozen_array(np.asarray(self.vectors, dtype=float))
        res = _frozen_array(np.asarray(self.resultant, dtype=float))
        if vec.ndim != 2 or vec.shape[1] != 2 or res.shape != (2,):
            raise LengthMismatch("vectors must be (n, 2) and resultant (2,)")
        if not np.allclose(res, vec.sum(axis=0), rtol=0.0, atol=1e-12):
            raise ValueError("resultant is not the sum of the phasors")
        object.__setattr__(self, "vectors", vec)
        object.__setattr__(self, "resultant", res)
        object.__setattr__(self, "gamma", float(self.gamma))


@dataclass(frozen=True)
class TraceSeries:
    """A named scalar quantity sampled on a strictly increasing gamma grid."""

    gammas: np.ndarray
    values: np.ndarray
    quantity: str

    def __post_init__(self):
        g = _frozen_array(self.gammas)
        v = _frozen_array(self.values)
        if g.size == 0:
            raise EmptyGrid("gamma grid is empty")
        if g.size != v.size:
            raise LengthMismatch(f"{g.size} gammas but {v.size} values")
        if g.size > 1 and not np.all(np.diff(g) > 0):
            raise ValueError("gamma grid must be strictly increasing")
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}")
        object.__setattr__(self, "gammas", g)
        object.__setattr__(self, "values", v)


def evolve(state: PureState, gamma: float) -> PureState:
    """State after evolving by the group parameter gamma."""
    return PureState(
        state.eigenvalues,
        state.weights,
        state.phases - state.eigenvalues * float(gamma),
    )


def overlap(state: PureState, gamma: float) -> complex:
    """Overlap <state_gamma | state> = sum_k w_k exp(i g_k gamma)."""
    return complex(
        kernels.overlap_grid(state.weights, state.eigenvalues, np.array([float(gamma)]))[0]
    )


def survival(state: PureState, gamma: float) -> float:
    """Squared modulus of the overlap, clipped into [0, 1]."""
    raw = float(
        kernels.survival_grid(state.weights, state.eigenvalues, np.array([float(gamma)]))[0]
    )
    return min(max(raw, 0.0), 1.0)


def distinguishability(state: PureState, gamma: float) -> Distinguishability:
    """Survival and relative entropy of distinguishability; the two sum to one."""
    s = survival(state, gamma)
    return Distinguishability(survival=s, relative_entropy=1.0 - s)


def phasor_diagram(state: PureState, gamma: float) -> PhasorDiagram:
    """Decompose the overlap at gamma into one phasor per component."""
    ang = state.eigenvalues * float(gamma)
    vectors = state.weights[:, None] * np.column_stack([np.cos(ang), np.sin(ang)])
    return PhasorDiagram(vectors=vectors, resultant=vectors.sum(axis=0), gamma=float(gamma))


def trace_series(state: PureState, gammas, quantity: str = "survival") -> TraceSeries:
    """Sample survival, relative entropy or resultant norm along the orbit."""
    grid = np.atleast_1d(np.asarray(gammas, dtype=float))
    if grid.size == 0:
        raise EmptyGrid("gamma grid is empty")
    if quantity == "resultant_norm":
        amp = kernels.overlap_grid(state.weights, state.eigenvalues, grid)
        values = np.abs(amp)
    elif quantity in ("survival", "relative_entropy"):
        values = np.clip(kernels.survival_grid(state.weights, state.eigenvalues, grid), 0.0, 1.0)
        if quantity == "relative_entropy":
            values = 1.0 - values
    else:
        raise ValueError(f"unknown quantity {quantity!r}")
    return TraceSeries(gammas=grid, values=values, quantity=quantity)


def inner_product(a: PureState, b: PureState) -> complex:
    """Inner product <a|b> of two states sharing one eigenbasis.

    Raises LengthMismatch when the component counts differ and ValueError when
    the eigenvalue grids disagree.
    """
    if a.count != b.count:
        raise LengthMismatch(f"{a.count}-component state against {b.count}-component state")
    if not np.array_equal(a.eigenvalues, b.eigenvalues):
        raise ValueError("states live in different eigenbases")
    amp = np.sqrt(a.weights * b.weights) * np.exp(1j * (b.phases - a.phases))
    return complex(np.sum(amp))
