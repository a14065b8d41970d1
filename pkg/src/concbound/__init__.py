"""Analytic, measurable lower bounds on the concurrence of bipartite states."""

from .bipartite import (
    BipartiteDensity,
    BipartiteDims,
    SchmidtDecomposition,
    partial_trace_a,
    partial_trace_b,
    partial_transpose_a,
    realign,
    realign_adjoint,
    realign_dual,
    realign_inverse,
    schmidt,
)
from .concurrence import (
    ConcurrenceBound,
    lower_bound,
    mixing_gap,
    pure_concurrence,
    pure_two_copy_concurrence,
    two_copy_expectations,
)
from .criteria import CriteriaReport, ccnr_value, enhanced_f, evaluate, nonlinear_witness_value, ppt_min_eigenvalue
from .roof import RoofConfig, RoofEstimate, roof_upper
from .witness import WitnessOperator, build_witness, witness_expectation

__all__ = [
    "BipartiteDensity", "BipartiteDims", "SchmidtDecomposition",
    "partial_trace_a", "partial_trace_b", "partial_transpose_a",
    "realign", "realign_adjoint", "realign_dual", "realign_inverse", "schmidt",
    "ConcurrenceBound", "lower_bound", "mixing_gap", "pure_concurrence",
    "pure_two_copy_concurrence", "two_copy_expectations",
    "CriteriaReport", "ccnr_value", "enhanced_f", "evaluate", "nonlinear_witness_value", "ppt_min_eigenvalue",
    "RoofConfig", "RoofEstimate", "roof_upper",
    "WitnessOperator", "build_witness", "witness_expectation",
]
