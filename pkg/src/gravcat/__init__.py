"""Thermal quantum correlations of two gravitationally coupled qubits.

The model: two massive particles, each in a double-well superposition
("gravcat" qubits), coupled through their mutual gravitational attraction
and held at temperature T.  This package provides the closed-form thermal
state, its quantum steering, concurrence and trace-norm geometric discord,
brute-force linear-algebra oracles validating every closed form, and a
sweep/threshold engine with deterministic CSV/JSON emission.
"""

from ._version import __version__
from .correlations import (
    CorrelationReport,
    FanoBloch,
    SteeringCoefficients,
    concurrence_x,
    evaluate,
    fano_bloch,
    gqd,
    steered_state_a_to_b,
    steered_state_b_to_a,
    steering_a_to_b,
    steering_asymmetry,
    steering_b_to_a,
    steering_coefficients,
)
from .model import (
    EigenSystem,
    ModelParams,
    PhysicalGeometry,
    XState,
    build_hamiltonian,
    eigensystem,
    gamma_from_geometry,
    gibbs_xstate,
    ground_state,
    log_partition_function,
    partition_function,
)
from .sweep import (
    Axis,
    ResultTable,
    SweepSpec,
    ThresholdQuery,
    emit,
    find_threshold,
    run_sweep,
)

__all__ = [
    "__version__",
    "ModelParams",
    "PhysicalGeometry",
    "EigenSystem",
    "XState",
    "build_hamiltonian",
    "eigensystem",
    "partition_function",
    "log_partition_function",
    "gibbs_xstate",
    "ground_state",
    "gamma_from_geometry",
    "SteeringCoefficients",
    "FanoBloch",
    "CorrelationReport",
    "steering_coefficients",
    "steered_state_a_to_b",
    "steered_state_b_to_a",
    "steering_a_to_b",
    "steering_b_to_a",
    "steering_asymmetry",
    "concurrence_x",
    "fano_bloch",
    "gqd",
    "evaluate",
    "Axis",
    "SweepSpec",
    "ThresholdQuery",
    "ResultTable",
    "run_sweep",
    "find_threshold",
    "emit",
]
