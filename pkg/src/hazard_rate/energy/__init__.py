"""Per-country capacity expansion and LCOH."""

from hazard_rate.energy.aggregation import aggregate_profile
from hazard_rate.energy.audit import audit_solution
from hazard_rate.energy.lcoh import compute_lcoh, demand_from_potential
from hazard_rate.energy.portfolio import (
    CaseFailure,
    PortfolioResult,
    PortfolioSolver,
    solve_case,
    solve_portfolio,
)
from hazard_rate.energy.problem import LinearProgram, build_problem, unit_costs
from hazard_rate.energy.solver import solve
from hazard_rate.energy.technologies import technology_set

__all__ = [
    "CaseFailure",
    "LinearProgram",
    "PortfolioResult",
    "PortfolioSolver",
    "aggregate_profile",
    "audit_solution",
    "build_problem",
    "compute_lcoh",
    "demand_from_potential",
    "solve",
    "solve_case",
    "solve_portfolio",
    "technology_set",
    "unit_costs",
]
