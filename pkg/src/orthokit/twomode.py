"""Two-mode bosonic generator: spectrum, eigenvectors, and comb states.

For N bosons in two modes with level weights g0, g1 and a mode-exchange
coupling g01, the generator restricted to the fixed-N sector is a real
symmetric tridiagonal (N+1)x(N+1) matrix in the occupation basis
|N-n, n>.  Its spectrum is an exact ladder g_n = offset + n * spacing with

    spacing = sqrt((g1 - g0)^2 + 4 g01^2)
    offset  = (N / 2) * (g0 + g1 - spacing)

so every equally-strided subset of eigenlevels hosts a comb state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .errors import (
    CombConstraintViolation,
    ConvergenceFailure,
    DegenerateLevels,
    DegenerateSpectrum,
    InvalidCount,
    InvalidParams,
    InvalidStride,
    LengthMismatch,
    UnsupportedN,
)
from .state import PureState, _frozen_array

#: largest supported boson number (matrix side is bosons + 1)
MAX_BOSONS = 4096


@dataclass(frozen=True)
class TwoModeParams:
    """Mode weights, coupling strength and boson number.

    Without coupling the mode weights must be strictly ordered (g0 < g1):
    equal weights make every level degenerate, and reversed ones are the
    same model with the mode labels swapped.
    """

    g0: float
    g1: float
    g01: float
    bosons: int

    def __post_init__(self):
        if int(self.bosons) != self.bosons or not 1 <= self.bosons <= MAX_BOSONS:
            raise UnsupportedN(f"bosons must be an integer in 1..{MAX_BOSONS}")
        object.__setattr__(self, "bosons", int(self.bosons))
        object.__setattr__(self, "g0", float(self.g0))
        object.__setattr__(self, "g1", float(self.g1))
        object.__setattr__(self, "g01", float(self.g01))
        if self.g01 == 0.0:
            if self.g1 == self.g0:
                raise DegenerateSpectrum("g0 == g1 with no coupling: flat spectrum")
            if self.g1 < self.g0:
                raise InvalidParams("order the uncoupled mode weights as g0 < g1")


@dataclass(frozen=True)
class AnalyticSpectrum:
    """Closed-form eigenvalue ladder of a two-mode generator."""

    offset: float
    spacing: float
    eigenvalues: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", _frozen_array(self.eigenvalues))


@dataclass(frozen=True)
class SpectralDecomposition:
    """Numerically diagonalized generator plus its analytic ladder constants.

    ``eigenvectors[:, n]`` is the eigenvector of ``eigenvalues[n]``; each
    column is normalized with its largest-magnitude component positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    offset: float
    spacing: float

    def __post_init__(self):
        vals = _frozen_array(self.eigenvalues)
        vecs = _frozen_array(self.eigenvectors)
        if vecs.shape != (vals.size, vals.size):
            raise LengthMismatch(
                f"{vals.size} eigenvalues against eigenvector block {vecs.shape}"
            )
        object.__setattr__(self, "eigenvalues", vals)
        object.__setattr__(self, "eigenvectors", vecs)


@dataclass(frozen=True)
class CombState:
    """A comb supported on equally-strided levels of a two-mode generator."""

    g_basis: PureState
    fock_amplitudes: np.ndarray
    gamma_tilde: float

    def __post_init__(self):
        object.__setattr__(
            self, "fock_amplitudes", _frozen_array(self.fock_amplitudes, dtype=complex)
        )


@dataclass(frozen=True)
class ExtremalStates:
    """Fastest- and slowest-orthogonalizing two-component combs."""

    fastest: CombState
    slowest: CombState
    fastest_label: str
    slowest_label: str


@dataclass(frozen=True)
class CombGammaBounds:
    """Range of comb orthogonality parameters available at a given stride."""

    shortest: float
    longest: float


@dataclass(frozen=True)
class TwoModeCombSpec:
    """Comb over generator levels base_index, base_index + stride, ...

    The count levels must fit inside the ladder of bosons + 1 levels.
    """

    params: TwoModeParams
    base_index: int = 0
    stride: int = 1
    count: int = 2
    phases: np.ndarray | None = None

    def __post_init__(self):
        for name in ("base_index", "stride", "count"):
            v = getattr(self, name)
            if int(v) != v:
                raise InvalidParams(f"{name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.count < 2:
            raise InvalidCount(f"comb needs count >= 2, got {self.count}")
        n = self.params.bosons
        if not 1 <= self.stride <= n:
            raise InvalidStride(f"stride must lie in 1..{n}, got {self.stride}")
        top = self.base_index + self.stride * (self.count - 1)
        if self.base_index < 0 or top > n:
            raise CombConstraintViolation(
                f"levels {self.base_index}..{top} do not fit in 0..{n}"
            )
        if self.phases is not None:
            ph = _frozen_array(self.phases)
            if ph.size != self.count:
                raise LengthMismatch(
                    f"got {ph.size} phases for a {self.count}-component comb"
                )
            object.__setattr__(self, "phases", ph)


def _bands(params: TwoModeParams) -> tuple[np.ndarray, np.ndarray]:
    n = params.bosons
    occ = np.arange(n + 1, dtype=float)
    diag = params.g0 * (n - occ) + params.g1 * occ
    off = params.g01 * np.sqrt((occ[:-1] + 1.0) * (n - occ[:-1]))
    return diag, off


def build_generator(params: TwoModeParams) -> np.ndarray:
    """Dense symmetric tridiagonal generator in the occupation basis |N-n, n>."""
    diag, off = _bands(params)
    return np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)


def spectrum_analytic(params: TwoModeParams) -> AnalyticSpectrum:
    """Exact eigenvalue ladder of the generator."""
    spacing = math.hypot(params.g1 - params.g0, 2.0 * params.g01)
    offset = 0.5 * params.bosons * (params.g0 + params.g1 - spacing)
    return AnalyticSpectrum(
        offset=offset,
        spacing=spacing,
        eigenvalues=offset + spacing * np.arange(params.bosons + 1),
    )


def diagonalize(params: TwoModeParams) -> SpectralDecomposition:
    """Numerical eigendecomposition with deterministic eigenvector signs."""
    diag, off = _bands(params)
    try:
        vals, vecs = eigh_tridiagonal(diag, off)
    except LinAlgError as exc:
        raise ConvergenceFailure(f"tridiagonal eigensolver failed: {exc}") from exc
    flip = vecs[np.abs(vecs).argmax(axis=0), np.arange(vecs.shape[1])] < 0
    vecs = np.where(flip[None, :], -vecs, vecs)
    analytic = spectrum_analytic(params)
    return SpectralDecomposition(
        eigenvalues=vals,
        eigenvectors=vecs,
        offset=analytic.offset,
        spacing=analytic.spacing,
    )


def extremal_eigenvector_pair(decomp: SpectralDecomposition) -> tuple[np.ndarray, np.ndarray]:
    """Lowest and highest eigenvectors fixed to the corner-positive gauge.

    The per-column largest-component convention of :func:`diagonalize` flips
    the top eigenvector's sign as the coupling grows, which would put a fake
    jump into any quantity built from the pair.  The corner components
    (occupation 0 in the lowest eigenvector, occupation N in the highest)
    never vanish on the supported parameter domain, so requiring them
    positive gives a gauge that is continuous in the coupling.
    """
    c0 = decomp.eigenvectors[:, 0].copy()
    cn = decomp.eigenvectors[:, -1].copy()
    if c0[0] < 0:
        c0 = -c0
    if cn[-1] < 0:
        cn = -cn
    return c0, cn


def comb_state(spec: TwoModeCombSpec) -> CombState:
    """Realize a two-mode comb: eigenbasis weights plus occupation amplitudes."""
    decomp = diagonalize(spec.params)
    idx = spec.base_index + spec.stride * np.arange(spec.count)
    phases = np.zeros(spec.count) if spec.phases is None else np.asarray(spec.phases, float)
    coeff = np.exp(1j * phases) / math.sqrt(spec.count)
    g_basis = PureState(
        decomp.eigenvalues[idx], np.full(spec.count, 1.0 / spec.count), phases
    )
    return CombState(
        g_basis=g_basis,
        fock_amplitudes=decomp.eigenvectors[:, idx] @ coeff,
        gamma_tilde=2.0 * math.pi / (spec.count * spec.stride * decomp.spacing),
    )


def extremal_states(params: TwoModeParams, phase: float = 0.0) -> ExtremalStates:
    """The fastest and slowest two-component combs of a generator.

    The fastest pairs the outermost levels (stride N), the slowest adjacent
    ones (stride 1).  At zero coupling these reduce to the two-mode analogues
    of GHZ-type and W-type superpositions, which is how they are labelled.
    """
    ph = np.array([0.0, phase])
    fastest = comb_state(
        TwoModeCombSpec(params, base_index=0, stride=params.bosons, count=2, phases=ph)
    )
    slowest = comb_state(
        TwoModeCombSpec(params, base_index=0, stride=1, count=2, phases=ph)
    )
    return ExtremalStates(
        fastest=fastest,
        slowest=slowest,
        fastest_label="ghz-type",
        slowest_label="w-type",
    )


def gamma_comb_bounds(bosons: int, stride: int, spacing: float) -> CombGammaBounds:
    """Orthogonality-parameter range over all comb counts at a fixed stride.

    The largest admissible count gives 2*pi/((bosons + stride) * spacing); a
    two-component stride-1 comb gives the overall longest, pi/spacing.
    """
    if int(bosons) != bosons or bosons < 1:
        raise UnsupportedN(f"bosons must be a positive integer, got {bosons!r}")
    if int(stride) != stride or not 1 <= stride <= bosons:
        raise InvalidStride(f"stride must lie in 1..{bosons}, got {stride!r}")
    if not spacing > 0:
        raise InvalidParams(f"spacing must be positive, got {spacing!r}")
    return CombGammaBounds(
        shortest=2.0 * math.pi / ((bosons + stride) * spacing),
        longest=math.pi / spacing,
    )


def tunneling_ratio(g0: float, g1: float, g01: float) -> float:
    """Factor by which coupling shortens comb orthogonality parameters.

    Equals spacing(no coupling) / spacing(coupling), i.e.
    1 / sqrt(1 + 4 g01^2 / (g1 - g0)^2).
    """
    d = g1 - g0
    if d == 0:
        raise DegenerateLevels("tunneling ratio undefined for g0 == g1")
    return abs(d) / math.hypot(d, 2.0 * g01)
