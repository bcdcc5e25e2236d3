"""Orthogonality times, speed bounds and mode entanglement on unitary orbits."""

from ._backend import backend_name
from .entanglement import (
    BifurcationReport,
    FockState,
    GammaConcurrenceCheck,
    asymptotic_limit_fidelity,
    comb_concurrence_formula,
    concurrence,
    concurrence_bound,
    concurrence_fast_trace,
    fast_concurrence_closed_form,
    fast_gamma_tilde,
    fast_state_amplitudes,
    find_bifurcation,
    gamma_concurrence_check,
    reduced_mode_weights,
)
from .errors import OrthokitError
from .evolution import (
    Distinguishability,
    PhasorDiagram,
    TraceSeries,
    distinguishability,
    evolve,
    inner_product,
    overlap,
    phasor_diagram,
    survival,
    trace_series,
)
from .orthogonality import (
    BoundsReport,
    CombRelations,
    OrthonormalFamily,
    bounds,
    comb_relations,
    first_orthogonality,
    gamma_tilde,
    orthonormal_family,
    period,
)
from .state import (
    CombSpec,
    GStatistics,
    PureState,
    g_statistics,
    make_comb,
    make_state,
    shannon_entropy,
)
from .twomode import (
    AnalyticSpectrum,
    CombGammaBounds,
    CombState,
    ExtremalStates,
    SpectralDecomposition,
    TwoModeCombSpec,
    TwoModeParams,
    build_generator,
    comb_state,
    diagonalize,
    extremal_eigenvector_pair,
    extremal_states,
    gamma_comb_bounds,
    spectrum_analytic,
    tunneling_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticSpectrum",
    "BifurcationReport",
    "BoundsReport",
    "CombGammaBounds",
    "CombRelations",
    "CombSpec",
    "CombState",
    "Distinguishability",
    "ExtremalStates",
    "FockState",
    "GStatistics",
    "GammaConcurrenceCheck",
    "OrthokitError",
    "OrthonormalFamily",
    "PhasorDiagram",
    "PureState",
    "SpectralDecomposition",
    "TraceSeries",
    "TwoModeCombSpec",
    "TwoModeParams",
    "asymptotic_limit_fidelity",
    "backend_name",
    "bounds",
    "build_generator",
    "comb_concurrence_formula",
    "comb_relations",
    "comb_state",
    "concurrence",
    "concurrence_bound",
    "concurrence_fast_trace",
    "diagonalize",
    "distinguishability",
    "evolve",
    "extremal_eigenvector_pair",
    "extremal_states",
    "fast_concurrence_closed_form",
    "fast_gamma_tilde",
    "fast_state_amplitudes",
    "find_bifurcation",
    "first_orthogonality",
    "g_statistics",
    "gamma_comb_bounds",
    "gamma_concurrence_check",
    "gamma_tilde",
    "inner_product",
    "make_comb",
    "make_state",
    "orthonormal_family",
    "overlap",
    "period",
    "phasor_diagram",
    "reduced_mode_weights",
    "shannon_entropy",
    "spectrum_analytic",
    "survival",
    "trace_series",
    "tunneling_ratio",
]
