"""Convex blend of economic and hazard rates."""

from hazard_rate.errors import ErrorCode, InputError

DEFAULT_WEIGHT_A = 0.75


def blend(i_e: float, i_n: float, a: float = DEFAULT_WEIGHT_A) -> float:
    """
    Final rate a * i_e + (1 - a) * i_n.

    Args:
        i_e: Economic rate in [0, 1]
        i_n: Normalized hazard rate in [0, 1]
        a: Economic share in [0, 1]

    Returns:
        Final discount rate, between i_e and i_n

    Raises:
        InputError: WEIGHT_OUT_OF_RANGE for a outside [0, 1], OUT_OF_RANGE for rates
    """
    if not 0.0 <= a <= 1.0:
        raise InputError(ErrorCode.WEIGHT_OUT_OF_RANGE, f"blend weight a must be in [0, 1], got {a}")
    for name, value in (("i_e", i_e), ("i_n", i_n)):
        if not 0.0 <= value <= 1.0:
            raise InputError(ErrorCode.OUT_OF_RANGE, f"{name} must be in [0, 1], got {value}")
    if a == 1.0:
        return i_e
    if a == 0.0:
        return i_n
    result = a * i_e + (1.0 - a) * i_n
    # Keep rounding noise inside the bracket
    return min(max(result, min(i_e, i_n)), max(i_e, i_n))


def blend_sweep(
    rates: dict[str, tuple[float, float]],
    weights: list[float],
) -> dict[float, dict[str, float]]:
    """
    Final rates of every country for each economic share in a sweep.

    Args:
        rates: iso3 -> (i_economic, i_hazard)
        weights: Economic shares a to evaluate

    Returns:
        a -> iso3 -> i_final
    """
    return {
        a: {iso3: blend(i_e, i_n, a) for iso3, (i_e, i_n) in sorted(rates.items())}
        for a in weights
    }
