"""Quantum discord and entanglement of quasi-Werner states built from
bipartite superposed coherent states."""
from ._backend import BACKEND
from .closed_form import (
    CorrelationReport,
    MeasurementAngles,
    OutcomePair,
    concurrence_mixed,
    conditional_entropy,
    discord,
    entanglement_of_formation,
    joint_eigenvalues,
    mutual_information,
    outcome_probabilities,
    reduced_eigenvalues,
    sqrt_eigenvalues_rho_rhotilde,
    werner_limit_measures,
)
from .errors import (
    ConvergenceError,
    DegenerateMode,
    DegenerateState,
    InvalidParams,
    MixingOutOfRange,
    NotHermitian,
    SCSError,
    ZeroProbabilityOutcome,
)
from .minimizer import MinimizationResult, correlation_report, delta_minus_eof, minimize_discord
from .states import (
    CoherentParams,
    NormalizationSet,
    Parity,
    PureSCS,
    QuasiWernerState,
    normalization_constants,
    pure_concurrence,
    pure_scs_vector,
    quasi_werner_density,
)

__version__ = "0.1.0"
