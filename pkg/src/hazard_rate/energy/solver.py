"""HiGHS-backed solve of the sizing LP."""

import numpy as np
import structlog
from scipy.optimize import linprog

from hazard_rate.energy.problem import LinearProgram
from hazard_rate.errors import ErrorCode, ModelError
from hazard_rate.models.energy import DispatchSolution, Technology

logger = structlog.get_logger()

_STATUS_CODES = {
    2: ErrorCode.INFEASIBLE,
    3: ErrorCode.UNBOUNDED,
}


def solve(problem: LinearProgram) -> DispatchSolution:
    """
    Solve the LP to optimality and scale the result back to physical units.

    Args:
        problem: Output of build_problem

    Returns:
        DispatchSolution in kW, kWh per step and USD/yr

    Raises:
        ModelError: INFEASIBLE, UNBOUNDED, or INFEASIBLE when the solver stops early
    """
    iso3 = problem.case.country.iso3
    result = linprog(
        problem.c,
        A_ub=problem.a_ub,
        b_ub=problem.b_ub,
        A_eq=problem.a_eq,
        b_eq=problem.b_eq,
        bounds=problem.bounds,
        method="highs",
    )

    if result.status != 0:
        code = _STATUS_CODES.get(result.status, ErrorCode.INFEASIBLE)
        logger.warning("LP not solved", iso3=iso3, status=result.status, message=result.message)
        raise ModelError(code, f"{iso3}: {result.message}", iso3=iso3, status=result.status)

    # Solver tolerances can leave -1e-12 style values
    x = np.maximum(result.x, 0.0)
    scale = problem.scale
    electricity = x[problem.block(0)] * scale
    efficiency = problem.case.technologies[Technology.ELECTROLYZER].efficiency

    return DispatchSolution(
        cap_wind=float(x[0] * scale),
        cap_pv=float(x[1] * scale),
        cap_ely=float(x[2] * scale),
        cap_storage=float(x[3] * scale),
        electricity=electricity,
        hydrogen=efficiency * electricity,
        charge=x[problem.block(1)] * scale,
        discharge=x[problem.block(2)] * scale,
        soc=x[problem.block(3)] * scale,
        objective=float(result.fun * scale),
    )
