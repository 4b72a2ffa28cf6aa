"""Pearson correlation between economic and hazard rates."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy.special import betainc

from hazard_rate.errors import AnalysisError, ErrorCode


@dataclass(frozen=True)
class Correlation:
    """Sample Pearson coefficient with its two-sided p-value."""

    r: float
    p_value: float
    n: int


def _as_arrays(x: Sequence[float], y: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if xa.shape != ya.shape or xa.ndim != 1:
        raise AnalysisError(ErrorCode.INSUFFICIENT_DATA, "x and y must be 1-D and of equal length")
    if xa.size < 3:
        raise AnalysisError(ErrorCode.INSUFFICIENT_DATA, f"need at least 3 pairs, got {xa.size}")
    return xa, ya


def _pearson(xa: np.ndarray, ya: np.ndarray) -> float:
    dx = xa - xa.mean()
    dy = ya - ya.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise AnalysisError(ErrorCode.DEGENERATE_VARIANCE, "both vectors need nonzero variance")
    r = float(dx @ dy) / np.sqrt(sxx * syy)
    return float(np.clip(r, -1.0, 1.0))


def student_t_two_sided(t: float, df: int) -> float:
    """Two-sided tail probability of Student's t via the regularized incomplete beta."""
    return float(betainc(df / 2.0, 0.5, df / (df + t * t)))


def pearson_r(x: Sequence[float], y: Sequence[float]) -> Correlation:
    """
    Sample Pearson r and its parametric two-sided p-value.

    t = r * sqrt((n - 2) / (1 - r^2)) is tested against Student's t with
    n - 2 degrees of freedom.

    Raises:
        AnalysisError: INSUFFICIENT_DATA, DEGENERATE_VARIANCE
    """
    xa, ya = _as_arrays(x, y)
    n = int(xa.size)
    r = _pearson(xa, ya)
    if abs(r) == 1.0:
        return Correlation(r=r, p_value=0.0, n=n)
    t = r * np.sqrt((n - 2) / (1.0 - r * r))
    return Correlation(r=r, p_value=student_t_two_sided(float(t), n - 2), n=n)


def pearson_permutation_p(
    x: Sequence[float],
    y: Sequence[float],
    n_permutations: int = 10_000,
    seed: int = 0,
) -> float:
    """
    Two-sided permutation p-value of Pearson r, for checking the parametric one.

    Shuffles y with a seeded generator; p = (hits + 1) / (n_permutations + 1).
    """
    xa, ya = _as_arrays(x, y)
    observed = abs(_pearson(xa, ya))
    rng = np.random.default_rng(seed)

    dx = xa - xa.mean()
    dy = ya - ya.mean()
    scale = np.sqrt(float(dx @ dx) * float(dy @ dy))
    hits = 0
    for _ in range(n_permutations):
        r = abs(float(dx @ rng.permutation(dy)) / scale)
        if r >= observed - 1e-12:
            hits += 1
    return (hits + 1) / (n_permutations + 1)
