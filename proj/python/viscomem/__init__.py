"""Damped wave equations with sign-changing memory: kernel, weights, stepping, diagnostics."""

from ._viscomem import (
    ConfigError,
    DampingKind,
    DampingSpec,
    DiscreteOperators,
    InvariantViolation,
    KernelSpec,
    MassMatrix,
    Mesh,
    MemoryKernel,
    NumericalError,
    Problem,
    RunConfig,
    SimulationHistory,
    WeightTable,
    a_norm,
    assemble,
    beta,
    build_weight_table,
    discrete_energy,
    k_zero,
    kernel_transform,
    load_config,
    manufactured_problem,
    paper_1d_problem,
    paper_2d_problem,
    parse_config,
    rate,
    run,
    run_convergence,
    run_single,
    self_error_space,
    self_error_time,
    zero_problem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
