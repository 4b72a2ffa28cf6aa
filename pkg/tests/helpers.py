"""Brute-force reference for the sizing model."""

import numpy as np

from hazard_rate.energy.portfolio import solve_case
from hazard_rate.errors import ModelError
from hazard_rate.models.energy import SystemCase, Technology


def _objective_at(case: SystemCase, wind: float, pv: float) -> float:
    try:
        result = solve_case(case, {Technology.WIND: wind, Technology.PV: pv})
    except ModelError:
        return np.inf
    return result.solution.objective


def grid_oracle(case: SystemCase, points: int = 9, rounds: int = 9) -> float:
    """
    Cheapest total cost over a refined (wind, pv) capacity grid.

    Every grid point pins both generation capacities and leaves the
    electrolyzer, storage and dispatch to the LP. The cost as a function of
    (wind, pv) is convex, so zooming in around the best point converges on
    the joint optimum from above.
    """
    eta = case.technologies[Technology.ELECTROLYZER].efficiency
    energy = case.annual_demand_kwh / eta
    cf_wind = float(case.wind.values.mean())
    cf_pv = float(case.pv.values.mean())
    upper_wind = 3.0 * energy / (8760.0 * cf_wind) if cf_wind > 0 else 0.0
    upper_pv = 3.0 * energy / (8760.0 * cf_pv) if cf_pv > 0 else 0.0

    centre = (upper_wind / 2.0, upper_pv / 2.0)
    span = (upper_wind / 2.0, upper_pv / 2.0)
    best = (np.inf, centre)

    for _ in range(rounds):
        winds = np.clip(np.linspace(centre[0] - span[0], centre[0] + span[0], points), 0.0, None)
        pvs = np.clip(np.linspace(centre[1] - span[1], centre[1] + span[1], points), 0.0, None)
        for w in np.unique(winds):
            for p in np.unique(pvs):
                value = _objective_at(case, float(w), float(p))
                if value < best[0]:
                    best = (value, (float(w), float(p)))
        centre = best[1]
        # Keep +-2 grid steps around the incumbent
        span = (span[0] * 4.0 / (points - 1), span[1] * 4.0 / (points - 1))

    return best[0]
