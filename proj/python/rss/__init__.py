"""Optimal (R,s,S) inventory policies for non-stationary stochastic demand.

The heavy lifting lives in the compiled extension; this package re-exports
its surface: Instance, bnb_solve, enumerate_baseline, solve_fixed_plan,
extract_policy, compute_rs_plan, simulate_policy, truncated_pmf,
pattern_demands and the instance file helpers.
"""

from ._core import (
    BaselineResult,
    BnbResult,
    DemandDistribution,
    Instance,
    ParseError,
    Policy,
    PolicyReview,
    ResourceLimitError,
    SearchStats,
    SimulationReport,
    StructureViolationError,
    bnb_solve,
    compute_rs_plan,
    enumerate_baseline,
    extract_policy,
    load_instance,
    pattern_demands,
    save_instance,
    simulate_policy,
    solve_fixed_plan,
    truncated_pmf,
)

__all__ = [
    "BaselineResult",
    "BnbResult",
    "DemandDistribution",
    "Instance",
    "ParseError",
    "Policy",
    "PolicyReview",
    "ResourceLimitError",
    "SearchStats",
    "SimulationReport",
    "StructureViolationError",
    "bnb_solve",
    "compute_rs_plan",
    "enumerate_baseline",
    "extract_policy",
    "load_instance",
    "pattern_demands",
    "save_instance",
    "simulate_policy",
    "solve_fixed_plan",
    "truncated_pmf",
]
