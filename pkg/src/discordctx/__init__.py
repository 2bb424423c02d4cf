"""Quantum discord, entanglement and a product-average consistency test for two-qubit states."""
from .contextuality import (
    ContextualityVerdict,
    NoncontextualAssignment,
    Pauli,
    PauliPair,
    assignment_identity,
    classify,
    expectation,
    noncontextuality_gap,
)
from .correlations import (
    ConditionedOutcome,
    CorrelationReport,
    MeasurementSetting,
    classical_correlation,
    concurrence,
    discord,
    measure_B,
    mutual_information,
    quantum_discord,
    swap_subsystems,
    von_neumann_entropy,
)
from .errors import DimensionError, DiscordError, NumericalError, ParameterError, ValidationError
from .linalg import HermitianEigenDecomposition, hermitian_eigen, partial_trace, tensor_product
from .states import (
    CounterexampleParams,
    DensityMatrix,
    WernerParams,
    XStateParams,
    make_classical,
    make_counterexample,
    make_werner,
    make_x_state,
    validate,
)

__version__ = "0.1.0"
