"""Independent feasibility check of a dispatch solution."""

import numpy as np

from hazard_rate.models.energy import DispatchSolution, SystemCase, Technology


def audit_solution(case: SystemCase, solution: DispatchSolution, tol: float = 1e-6) -> list[str]:
    """
    Re-check every constraint from the case data, not from solver state.

    Residuals are measured on normalized units (per-step demand = 1).

    Args:
        case: System case
        solution: Dispatch to check
        tol: Absolute tolerance on normalized units

    Returns:
        Human-readable violations; empty when the solution is feasible
    """
    scale = case.annual_demand_kwh / case.steps
    hours = case.step_hours
    ely = case.technologies[Technology.ELECTROLYZER]
    storage = case.technologies[Technology.STORAGE]

    wind = solution.cap_wind / scale
    pv = solution.cap_pv / scale
    cap_ely = solution.cap_ely / scale
    cap_storage = solution.cap_storage / scale
    e = solution.electricity / scale
    h = solution.hydrogen / scale
    charge = solution.charge / scale
    discharge = solution.discharge / scale
    soc = solution.soc / scale

    violations: list[str] = []

    def check(name: str, residual: np.ndarray) -> None:
        worst = float(np.max(residual, initial=0.0))
        if worst > tol:
            step = int(np.argmax(residual))
            violations.append(f"{name}: violated by {worst:.3e} at step {step}")

    for label, value in (("wind", wind), ("pv", pv), ("electrolyzer", cap_ely), ("storage", cap_storage)):
        if value < -tol:
            violations.append(f"capacity {label} negative: {value:.3e}")
    for label, flow in (("electricity", e), ("charge", charge), ("discharge", discharge), ("soc", soc)):
        check(f"{label} >= 0", -flow)

    available = hours * (case.wind.values * wind + case.pv.values * pv)
    check("supply", e - available)
    check("electrolyzer capacity", e - hours * cap_ely)
    check("conversion", np.abs(h - ely.efficiency * e))
    check("hydrogen balance", np.abs(h - charge + discharge - 1.0))
    change = soc - np.roll(soc, 1)
    check(
        "storage dynamics",
        np.abs(change - storage.efficiency * charge + discharge / storage.discharge_efficiency),
    )
    check("storage capacity", soc - cap_storage)

    return violations
