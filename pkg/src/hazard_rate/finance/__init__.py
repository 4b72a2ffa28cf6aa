"""Capital-recovery arithmetic."""

from hazard_rate.finance.annuity import annualize, annuity_factor

__all__ = ["annualize", "annuity_factor"]
