"""Linear program of the wind/PV -> electrolyzer -> storage -> demand chain."""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from hazard_rate.errors import ErrorCode, ModelError
from hazard_rate.finance import annualize
from hazard_rate.models.energy import SystemCase, Technology

# Capacity variables lead the vector in this order
CAPACITY_ORDER = (Technology.WIND, Technology.PV, Technology.ELECTROLYZER, Technology.STORAGE)
N_CAPACITIES = len(CAPACITY_ORDER)


def unit_costs(case: SystemCase) -> dict[Technology, float]:
    """Annualized capex plus fixed opex per unit of capacity (USD/kW/yr, USD/kWh/yr for storage)."""
    costs = {}
    for tech in CAPACITY_ORDER:
        params = case.technologies[tech]
        costs[tech] = (
            annualize(params.capex, case.discount_rate, params.lifetime)
            + params.opex_frac * params.capex
        )
    return costs


@dataclass
class LinearProgram:
    """
    min c @ x  s.t.  a_ub @ x <= b_ub,  a_eq @ x == b_eq,  bounds.

    Energies are normalized so the per-step demand equals 1; multiply
    capacities, flows and the objective by scale to recover kW, kWh and USD/yr.
    Variable layout: 4 capacities, then per step electricity, charge,
    discharge and state of charge in blocks of length steps.
    """

    case: SystemCase
    c: np.ndarray
    a_ub: sp.csr_matrix
    b_ub: np.ndarray
    a_eq: sp.csr_matrix
    b_eq: np.ndarray
    bounds: list[tuple[float, float | None]]
    steps: int
    step_hours: float
    scale: float
    unit_costs: dict[Technology, float]

    @property
    def n_variables(self) -> int:
        return N_CAPACITIES + 4 * self.steps

    def block(self, index: int) -> slice:
        """Slice of the index-th per-step block (0 electricity .. 3 state of charge)."""
        start = N_CAPACITIES + index * self.steps
        return slice(start, start + self.steps)


def build_problem(
    case: SystemCase,
    fixed_capacities: dict[Technology, float] | None = None,
) -> LinearProgram:
    """
    Formulate the cost-minimal sizing problem of one country.

    Per step t (each standing for step_hours hours):
        e_t <= H * (cf_wind_t * W + cf_pv_t * P)     curtailment is free
        e_t <= H * E
        eta_ely * e_t - charge_t + discharge_t = demand_t
        soc_t = soc_(t-1) + eta_ch * charge_t - discharge_t / eta_dis   (cyclic)
        0 <= soc_t <= S
    Objective: sum over technologies of (annuity + opex) * capacity.

    Args:
        case: Country system case
        fixed_capacities: Technology -> capacity (kW or kWh) to pin instead of optimizing

    Returns:
        LinearProgram

    Raises:
        ModelError: INFEASIBLE_INPUT when no generation is ever available
    """
    wind = case.wind.values
    pv = case.pv.values
    if not (np.any(wind > 0) or np.any(pv > 0)):
        raise ModelError(
            ErrorCode.INFEASIBLE_INPUT,
            f"{case.country.iso3}: all capacity factors are zero",
            iso3=case.country.iso3,
        )

    steps = case.steps
    hours = case.step_hours
    scale = case.annual_demand_kwh / steps
    ely = case.technologies[Technology.ELECTROLYZER]
    storage = case.technologies[Technology.STORAGE]

    costs = unit_costs(case)
    c = np.zeros(N_CAPACITIES + 4 * steps)
    c[:N_CAPACITIES] = [costs[t] for t in CAPACITY_ORDER]

    eye = sp.identity(steps, format="csr")
    zero_caps = sp.csr_matrix((steps, N_CAPACITIES))
    zero_steps = sp.csr_matrix((steps, steps))
    previous = sp.csr_matrix(
        (np.ones(steps), (np.arange(steps), (np.arange(steps) - 1) % steps)),
        shape=(steps, steps),
    )

    supply_caps = np.zeros((steps, N_CAPACITIES))
    supply_caps[:, 0] = -hours * wind
    supply_caps[:, 1] = -hours * pv
    ely_caps = np.zeros((steps, N_CAPACITIES))
    ely_caps[:, 2] = -hours
    soc_caps = np.zeros((steps, N_CAPACITIES))
    soc_caps[:, 3] = -1.0

    a_ub = sp.bmat(
        [
            [sp.csr_matrix(supply_caps), eye, zero_steps, zero_steps, None],
            [sp.csr_matrix(ely_caps), eye, None, None, None],
            [sp.csr_matrix(soc_caps), None, None, None, eye],
        ],
        format="csr",
    )
    b_ub = np.zeros(3 * steps)

    a_eq = sp.bmat(
        [
            [zero_caps, ely.efficiency * eye, -eye, eye, None],
            [
                zero_caps,
                None,
                -storage.efficiency * eye,
                (1.0 / storage.discharge_efficiency) * eye,
                eye - previous,
            ],
        ],
        format="csr",
    )
    b_eq = np.concatenate([np.ones(steps), np.zeros(steps)])

    bounds: list[tuple[float, float | None]] = [(0.0, None)] * (N_CAPACITIES + 4 * steps)
    for tech, value in (fixed_capacities or {}).items():
        if value < 0:
            raise ModelError(ErrorCode.NEGATIVE_INPUT, f"fixed {tech.value} capacity must be >= 0")
        pinned = value / scale
        bounds[CAPACITY_ORDER.index(tech)] = (pinned, pinned)

    return LinearProgram(
        case=case,
        c=c,
        a_ub=a_ub,
        b_ub=b_ub,
        a_eq=a_eq,
        b_eq=b_eq,
        bounds=bounds,
        steps=steps,
        step_hours=hours,
        scale=scale,
        unit_costs=costs,
    )
