"""Mode entanglement of two-mode boson states.

In a fixed-N sector the reduced state of one mode is diagonal in occupation
number, so the mode concurrence of sum_n b_n |N-n, n> has the closed form
C = sqrt(2 (1 - sum_n |b_n|^4)).  This module evaluates it for arbitrary
amplitude vectors, tracks it along the orbit of the fastest comb state, and
locates the coupling threshold where that orbit's single concurrence peak
splits in two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import (
    InvalidCount,
    InvalidParams,
    LengthMismatch,
    NoBifurcationFound,
    NotNormalizable,
    TunnelingPresent,
    UnsupportedN,
)
from .evolution import TraceSeries
from .state import _frozen_array, g_statistics
from .twomode import (
    TwoModeCombSpec,
    TwoModeParams,
    comb_state,
    diagonalize,
    extremal_eigenvector_pair,
)

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class FockState:
    """Occupation-basis amplitudes b_n over |N-n, n>, n = 0..N, unit norm."""

    bosons: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if int(self.bosons) != self.bosons or self.bosons < 1:
            raise UnsupportedN(f"bosons must be a positive integer, got {self.bosons!r}")
        object.__setattr__(self, "bosons", int(self.bosons))
        amp = _frozen_array(self.amplitudes, dtype=complex)
        if amp.size != self.bosons + 1:
            raise LengthMismatch(
                f"need {self.bosons + 1} amplitudes, got {amp.size}"
            )
        norm = float(np.sum(amp.real**2 + amp.imag**2))
        if abs(norm - 1.0) > 1e-12:
            raise NotNormalizable(f"squared amplitudes sum to {norm!r}")
        object.__setattr__(self, "amplitudes", amp)


@dataclass(frozen=True)
class GammaConcurrenceCheck:
    """Cross-check of a comb's orthogonality parameter against its concurrence."""

    gamma_tilde: float
    predicted: float
    concurrence: float
    agree: bool


@dataclass(frozen=True)
class BifurcationReport:
    """Where the fastest state's concurrence peak splits as coupling grows."""

    critical_ratio: float
    peak_gamma_below: float
    peak_gammas_above: tuple[float, float]
    max_concurrence_at_critical: float
    gamma_tilde_at_critical: float


def reduced_mode_weights(state: FockState) -> np.ndarray:
    """Occupation distribution of one mode (eigenvalues of its reduced state)."""
    amp = state.amplitudes
    return amp.real**2 + amp.imag**2


def concurrence(state: FockState) -> float:
    """Mode concurrence sqrt(2 (1 - sum_n w_n^2)) of a fixed-N pure state."""
    w = reduced_mode_weights(state)
    return _SQRT2 * math.sqrt(max(1.0 - float(np.dot(w, w)), 0.0))


def concurrence_bound(bosons: int) -> float:
    """Largest mode concurrence attainable with a given boson number."""
    if int(bosons) != bosons or bosons < 1:
        raise UnsupportedN(f"bosons must be a positive integer, got {bosons!r}")
    return math.sqrt(2.0 * bosons / (bosons + 1.0))


def comb_concurrence_formula(count: int) -> float:
    """Mode concurrence of an uncoupled comb state: sqrt(2 (count-1) / count)."""
    if int(count) != count or count < 2:
        raise InvalidCount(f"comb needs an integer count >= 2, got {count!r}")
    return math.sqrt(2.0 * (count - 1) / count)


def gamma_concurrence_check(spec: TwoModeCombSpec) -> GammaConcurrenceCheck:
    """Confirm gamma_tilde == pi C^2 / (2 (mean - ground)) for an uncoupled comb.

    The identity ties the orthogonality parameter of a comb to its mode
    concurrence; it is exact only without coupling, so coupled parameters
    are rejected with TunnelingPresent.
    """
    if spec.params.g01 != 0.0:
        raise TunnelingPresent("the concurrence identity needs g01 == 0")
    cs = comb_state(spec)
    c = concurrence(FockState(spec.params.bosons, cs.fock_amplitudes))
    mean_above = g_statistics(cs.g_basis).mean_above_ground
    predicted = math.pi * c * c / (2.0 * mean_above)
    return GammaConcurrenceCheck(
        gamma_tilde=cs.gamma_tilde,
        predicted=predicted,
        concurrence=c,
        agree=abs(predicted - cs.gamma_tilde) <= 1e-10 * cs.gamma_tilde,
    )


def _fast_parts(params: TwoModeParams):
    """Corner-gauge extremal pair and the data defining the fastest orbit."""
    decomp = diagonalize(params)
    c0, cn = extremal_eigenvector_pair(decomp)
    e0 = float(decomp.eigenvalues[0])
    en = float(decomp.eigenvalues[-1])
    return c0, cn, e0, en, math.pi / (en - e0)


def fast_state_amplitudes(params: TwoModeParams, phase: float, gamma: float) -> np.ndarray:
    """Occupation amplitudes of the evolved fastest state at one gamma.

    The fastest state is (|lowest> + e^{i phase} |highest>)/sqrt(2) with the
    extremal eigenvectors in the corner-positive gauge, so the amplitudes
    vary continuously with the coupling strength.
    """
    c0, cn, e0, en, _ = _fast_parts(params)
    return (
        c0 * np.exp(-1j * e0 * gamma) + cn * np.exp(1j * (phase - en * gamma))
    ) / _SQRT2


def fast_gamma_tilde(params: TwoModeParams) -> float:
    """Orthogonality parameter of the fastest state, pi / (g_N - g_0)."""
    return _fast_parts(params)[4]


def concurrence_fast_trace(params: TwoModeParams, phase: float, gammas) -> TraceSeries:
    """Mode concurrence along the fastest orbit, from explicit amplitudes.

    Direct route: build the evolved amplitude vector at every grid point and
    apply the concurrence closed form.  Kept deliberately independent of
    :func:`fast_concurrence_closed_form` so the two can check each other.
    """
    c0, cn, e0, en, _ = _fast_parts(params)
    grid = np.atleast_1d(np.asarray(gammas, dtype=float))
    amps = (
        c0[:, None] * np.exp(-1j * e0 * grid)[None, :]
        + cn[:, None] * np.exp(1j * (phase - en * grid))[None, :]
    ) / _SQRT2
    w = amps.real**2 + amps.imag**2
    values = _SQRT2 * np.sqrt(np.clip(1.0 - np.sum(w * w, axis=0), 0.0, None))
    return TraceSeries(gammas=grid, values=values, quantity="concurrence")


def fast_concurrence_closed_form(params: TwoModeParams, phase: float, gammas) -> np.ndarray:
    """Mode concurrence along the fastest orbit, via the quartic phase profile.

    Because the extremal eigenvectors are real, the concurrence depends on
    gamma only through theta = phase - (g_N - g_0) gamma:
    C = sqrt(2 (1 - (1/4) sum_n |c0_n + cN_n e^{i theta}|^4)).
    """
    c0, cn, e0, en, _ = _fast_parts(params)
    grid = np.atleast_1d(np.asarray(gammas, dtype=float))
    quartic = kernels.abs4_profile(c0, cn, phase - (en - e0) * grid)
    return _SQRT2 * np.sqrt(np.clip(1.0 - 0.25 * quartic, 0.0, None))


def _split_profile(params: TwoModeParams, phase: float, grid_points: int):
    """Concurrence profile over one fast period [0, 2 gamma_tilde]."""
    gt = fast_gamma_tilde(params)
    grid = np.linspace(0.0, 2.0 * gt, grid_points)
    values = fast_concurrence_closed_form(params, phase, grid)
    at_gt = float(fast_concurrence_closed_form(params, phase, np.array([gt]))[0])
    return gt, grid, values, at_gt


def _is_split(values: np.ndarray, at_gt: float, margin: float) -> bool:
    return bool(values.max() > at_gt + margin)


def find_bifurcation(
    g0: float,
    g1: float,
    bosons: int = 2,
    phase: float = 0.0,
    *,
    ratio_lo: float = 1e-2,
    ratio_hi: float = 1e2,
    grid_points: int = 2001,
    ratio_tol: float = 1e-4,
    split_margin: float = 1e-9,
) -> BifurcationReport:
    """Locate the coupling ratio where the fast concurrence peak bifurcates.

    The profile of C over one period has a single maximum (at gamma_tilde)
    for weak coupling g01 and two symmetric maxima for strong coupling; the
    threshold ratio g01/(g1 - g0) is found by bisection on the classifier
    "grid maximum exceeds C(gamma_tilde)".  Raises NoBifurcationFound when
    the scanned ratio range does not bracket the flip.
    """
    if not g1 > g0:
        raise InvalidParams("need g1 > g0 to form coupling ratios")
    if grid_points % 2 == 0 or grid_points < 11:
        raise InvalidParams("grid_points must be odd and at least 11")

    def profile(ratio: float):
        params = TwoModeParams(g0, g1, ratio * (g1 - g0), bosons)
        return _split_profile(params, phase, grid_points)

    def split(ratio: float) -> bool:
        _, _, values, at_gt = profile(ratio)
        return _is_split(values, at_gt, split_margin)

    ratios = np.geomspace(ratio_lo, ratio_hi, 81)
    flags = [split(r) for r in ratios]
    if flags[0] or not any(flags):
        raise NoBifurcationFound(
            f"no single-to-double transition inside [{ratio_lo}, {ratio_hi}]"
        )
    hi_idx = flags.index(True)
    lo, hi = float(ratios[hi_idx - 1]), float(ratios[hi_idx])
    while hi - lo > ratio_tol:
        mid = 0.5 * (lo + hi)
        if split(mid):
            hi = mid
        else:
            lo = mid
    critical = 0.5 * (lo + hi)

    _, grid_lo, vals_lo, _ = profile(lo)
    below_peak = float(grid_lo[int(np.argmax(vals_lo))])
    _, grid_hi, vals_hi, _ = profile(hi)
    mid_idx = grid_points // 2
    left = int(np.argmax(vals_hi[:mid_idx]))
    right = mid_idx + 1 + int(np.argmax(vals_hi[mid_idx + 1 :]))
    gt_crit, _, vals_crit, _ = profile(critical)
    return BifurcationReport(
        critical_ratio=critical,
        peak_gamma_below=below_peak,
        peak_gammas_above=(float(grid_hi[left]), float(grid_hi[right])),
        max_concurrence_at_critical=float(vals_crit.max()),
        gamma_tilde_at_critical=gt_crit,
    )


def asymptotic_limit_fidelity(params: TwoModeParams, phase: float = 0.0) -> float:
    """Overlap of the evolved fastest two-boson state at gamma_tilde with |1,1>.

    As the coupling ratio grows the state at gamma_tilde approaches the
    balanced occupation state (with amplitude -i), so this tends to one.
    Only defined for two bosons.
    """
    if params.bosons != 2:
        raise UnsupportedN("the balanced-occupation limit is a two-boson statement")
    amp = fast_state_amplitudes(params, phase, fast_gamma_tilde(params))
    return float(abs(amp[1]) ** 2)
