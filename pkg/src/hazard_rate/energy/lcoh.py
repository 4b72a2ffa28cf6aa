"""Levelized cost of hydrogen."""

from hazard_rate.energy.problem import CAPACITY_ORDER, unit_costs
from hazard_rate.errors import ErrorCode, ModelError
from hazard_rate.models.energy import DispatchSolution, LCOHResult, SystemCase

DEFAULT_DEMAND_SHARE = 0.25


def compute_lcoh(case: SystemCase, solution: DispatchSolution) -> LCOHResult:
    """
    LCOH = total annualized system cost / annual hydrogen demand in kg.

    Args:
        case: System case the solution belongs to
        solution: Feasible dispatch

    Returns:
        LCOHResult with per-technology cost breakdown (USD/yr)

    Raises:
        ModelError: ZERO_DEMAND
    """
    if case.annual_demand_kg <= 0:
        raise ModelError(ErrorCode.ZERO_DEMAND, f"{case.country.iso3}: annual demand is zero")

    costs = unit_costs(case)
    breakdown = {tech: costs[tech] * solution.capacity(tech) for tech in CAPACITY_ORDER}
    return LCOHResult(
        country=case.country,
        lcoh=solution.objective / case.annual_demand_kg,
        breakdown=breakdown,
        solution=solution,
        discount_rate=case.discount_rate,
        annual_demand_kg=case.annual_demand_kg,
    )


def demand_from_potential(total_potential_kg: float, share: float = DEFAULT_DEMAND_SHARE) -> float:
    """Annual demand served: a fixed share (25%) of the country's production potential."""
    if total_potential_kg < 0:
        raise ModelError(ErrorCode.NEGATIVE_INPUT, f"potential must be >= 0, got {total_potential_kg}")
    return share * total_potential_kg
