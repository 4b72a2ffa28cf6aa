"""Pure annuity functions turning overnight costs into yearly payments."""

import math
from numbers import Integral

from hazard_rate.errors import ErrorCode, InputError


def _check_inputs(i: float, n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, Integral):
        raise InputError(ErrorCode.NON_INTEGER_LIFETIME, f"lifetime must be an integer number of years, got {n!r}")
    if n < 1:
        raise InputError(ErrorCode.ZERO_LIFETIME, f"lifetime must be >= 1 year, got {n}")
    if math.isnan(i) or i < 0:
        raise InputError(ErrorCode.NEGATIVE_RATE, f"discount rate must be >= 0, got {i}")


def annuity_factor(i: float, n: int) -> float:
    """
    Capital recovery factor i(1+i)^n / ((1+i)^n - 1).

    Evaluated as i / (1 - (1+i)^-n) via expm1/log1p so that tiny rates stay
    accurate; i = 0 returns the limit 1/n.

    Args:
        i: Discount rate (fraction, >= 0)
        n: Economic lifetime in whole years (>= 1)

    Returns:
        Share of the overnight cost paid each year

    Raises:
        InputError: NEGATIVE_RATE, ZERO_LIFETIME, NON_INTEGER_LIFETIME
    """
    _check_inputs(i, n)
    if i == 0:
        return 1.0 / n
    return i / -math.expm1(-n * math.log1p(i))


def annualize(overnight_cost: float, i: float, n: int) -> float:
    """
    Equal yearly payment that repays an overnight cost over n years at rate i.

    Args:
        overnight_cost: Investment in USD (per kW or per kWh)
        i: Discount rate
        n: Economic lifetime in years

    Returns:
        USD per year (per kW or per kWh)
    """
    if overnight_cost < 0:
        raise InputError(ErrorCode.NEGATIVE_INPUT, f"overnight cost must be >= 0, got {overnight_cost}")
    return overnight_cost * annuity_factor(i, n)
