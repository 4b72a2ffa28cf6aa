"""Time aggregation of capacity-factor profiles."""

import re

import numpy as np

from hazard_rate.errors import ErrorCode, InputError
from hazard_rate.models.energy import CapacityFactorProfile

HOURS_PER_WEEK = 168

_BLOCK = re.compile(r"^(\d+)h$")


def aggregate_profile(profile: CapacityFactorProfile, resolution: str) -> CapacityFactorProfile:
    """
    Reduce a profile to a coarser horizon.

    '1h' keeps the native steps, '<k>h' averages consecutive blocks of k
    steps (a trailing partial block is averaged over its own length) and
    'week' builds the mean hour-of-week profile of 168 steps.

    Args:
        profile: Native profile
        resolution: '1h', '<k>h' or 'week'

    Returns:
        Aggregated profile of the same technology

    Raises:
        InputError: CONFIG_ERROR for an unknown resolution or a profile shorter than a week
    """
    values = profile.values

    if resolution == "week":
        if values.size < HOURS_PER_WEEK:
            raise InputError(
                ErrorCode.CONFIG_ERROR,
                f"'week' needs at least {HOURS_PER_WEEK} steps, profile has {values.size}",
            )
        slot = np.arange(values.size) % HOURS_PER_WEEK
        sums = np.bincount(slot, weights=values, minlength=HOURS_PER_WEEK)
        counts = np.bincount(slot, minlength=HOURS_PER_WEEK)
        return CapacityFactorProfile(profile.technology, sums / counts)

    match = _BLOCK.match(resolution)
    if match is None or int(match.group(1)) < 1:
        raise InputError(ErrorCode.CONFIG_ERROR, f"unknown resolution {resolution!r}")

    k = int(match.group(1))
    if k == 1:
        return profile

    starts = np.arange(0, values.size, k)
    sums = np.add.reduceat(values, starts)
    lengths = np.diff(np.append(starts, values.size))
    # Averages of values in [0, 1] can drift past 1 by an ulp
    return CapacityFactorProfile(profile.technology, np.clip(sums / lengths, 0.0, 1.0))
