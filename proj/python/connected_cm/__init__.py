"""Connected configuration-model graphs with a given degree distribution."""

from ._connected_cm import (
    BudgetExhausted,
    CcmError,
    build_embedding,
    census,
    decomposition_check,
    enumerate_counts,
    estimate_connectivity,
    integerize,
    mu,
    rate,
    sample_configuration,
    sample_connected,
    solve_beta,
)

__all__ = [
    "BudgetExhausted",
    "CcmError",
    "build_embedding",
    "census",
    "decomposition_check",
    "enumerate_counts",
    "estimate_connectivity",
    "integerize",
    "mu",
    "rate",
    "sample_configuration",
    "sample_connected",
    "solve_beta",
]
