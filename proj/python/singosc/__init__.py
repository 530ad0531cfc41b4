"""Singular oscillator with time-dependent frequency.

Closed-form transition probabilities in the su(1,1) discrete-series
representation, the classical reflection parameter rho, and an
independent truncated-basis propagation oracle.
"""

from ._core import (  # noqa: F401
    AlgebraReport,
    AsymptoteError,
    CollapseError,
    Error,
    FockVector,
    FrequencyProfile,
    GeneratorMatrices,
    InvariantDiagnostic,
    LeakageError,
    NormDriftError,
    OracleReport,
    OscillatorModel,
    ParseError,
    PoleError,
    ProfileKind,
    RangeError,
    ReflectionResult,
    SolverSettings,
    StepMethod,
    TransitionTable,
    TruncationError,
    WronskianError,
    __version__,
    adiabatic_invariant_ratio,
    build_generators,
    build_table,
    check_algebra,
    compare,
    compute_rho,
    energy_level,
    extract_probabilities,
    generating_g0,
    generating_g1,
    hamiltonian_matrix,
    initial_state,
    make_model,
    mean_excitation_diagnostic,
    propagate,
    rho_sudden,
    row_probabilities,
    transition_probability,
    transition_probability_hypergeometric,
    vacuum_probability,
)
