"""Distance between the failure process and Poisson/exponential stand-ins.

A trajectory discretized on a time grid yields independent per-interval
failure indicators with p_i = 1 - exp(-(H(t_i) - H(t_{i-1}))).  The sum of
those indicators is Poisson-binomial, and the Barbour-Hall form of the
Stein-Chen bound,

    d_TV(sum, Poisson(lambda)) <= min(1, 1/lambda) * sum(p_i^2),
    lambda = sum(p_i),

is computable at a desk.  For small n the exact total-variation distance is
also available from the exact Poisson-binomial pmf, which is what the bound
is tested against.  A Kolmogorov-Smirnov distance between an empirical
sample and an exponential model rounds out the desk-scale metrics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .compare import PraModel
from .hazard import HazardTrajectory, cumulative_hazard
from .sampling import EmpiricalDistribution

__all__ = [
    "DiscretizedFailureProcess",
    "discretize",
    "poisson_binomial_pmf",
    "stein_chen_tv_bound",
    "exact_tv_small",
    "ks_distance",
    "EXACT_TV_MAX_INDICATORS",
]

EXACT_TV_MAX_INDICATORS = 20


@dataclass(frozen=True)
class DiscretizedFailureProcess:
    """Per-interval failure probabilities, each strictly inside (0, 1)."""

    probabilities: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probabilities)
        object.__setattr__(self, "probabilities", probs)
        if any(not (0.0 < p < 1.0) for p in probs):
            raise ValueError("interval failure probabilities must lie strictly in (0, 1)")


def discretize(traj: HazardTrajectory, grid) -> DiscretizedFailureProcess:
    """Per-interval failure probabilities from cumulative-hazard increments.

    ``grid`` is strictly increasing with all times > 0; intervals are
    (0, t_1], (t_1, t_2], ...  By construction
    sum(-log(1 - p_i)) == H(t_n), so refining the grid preserves the total.
    """
    grid = tuple(float(t) for t in grid)
    if not grid:
        raise ValueError("grid must be nonempty")
    if grid[0] <= 0.0 or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing with all times positive")
    if not all(math.isfinite(t) for t in grid):
        raise ValueError("grid times must be finite")
    cum = [cumulative_hazard(traj, t) for t in grid]
    increments = [b - a for a, b in zip([0.0] + cum, cum)]
    return DiscretizedFailureProcess(
        probabilities=tuple(-math.expm1(-dh) for dh in increments)
    )


def poisson_binomial_pmf(probabilities) -> np.ndarray:
    """Exact pmf of a sum of independent indicators, by convolution."""
    pmf = np.array([1.0])
    for p in probabilities:
        nxt = np.zeros(len(pmf) + 1)
        nxt[:-1] = pmf * (1.0 - p)
        nxt[1:] += pmf * p
        pmf = nxt
    return pmf


def stein_chen_tv_bound(proc: DiscretizedFailureProcess) -> float:
    """Barbour-Hall total-variation bound between the indicator sum and
    Poisson(lambda) with lambda = sum(p_i)."""
    lam = sum(proc.probabilities)
    if lam == 0.0:
        return 0.0
    return min(1.0, 1.0 / lam) * sum(p * p for p in proc.probabilities)


def exact_tv_small(
    proc: DiscretizedFailureProcess, support_cap: int | None = None
) -> float:
    """Exact total-variation distance to Poisson(lambda), for n <= 20.

    The Poisson pmf is enumerated up to ``support_cap`` (default
    lambda + 40*sqrt(lambda) + 40, far past any mass at double precision)
    and the tail above the cap is folded in exactly via the survival
    function.
    """
    n = len(proc.probabilities)
    if n > EXACT_TV_MAX_INDICATORS:
        raise ValueError(
            f"exact enumeration supports at most {EXACT_TV_MAX_INDICATORS} indicators, got {n}"
        )
    lam = sum(proc.probabilities)
    if support_cap is None:
        support_cap = math.ceil(lam + 40.0 * math.sqrt(lam) + 40.0)
    support_cap = max(int(support_cap), n)
    sum_pmf = np.zeros(support_cap + 1)
    sum_pmf[: n + 1] = poisson_binomial_pmf(proc.probabilities)
    ks = np.arange(support_cap + 1)
    poisson_pmf = stats.poisson.pmf(ks, lam)
    tail = float(stats.poisson.sf(support_cap, lam))
    return 0.5 * (float(np.abs(sum_pmf - poisson_pmf).sum()) + tail)


def ks_distance(dist: EmpiricalDistribution, model: PraModel) -> float:
    """sup_t |F_hat(t) - (1 - exp(-rate t))|, exact over the step points."""
    if dist.n == 0:
        raise ValueError("empirical distribution is empty")
    n = dist.n
    d = 0.0
    for i, t in enumerate(dist.times):
        f = -math.expm1(-model.rate * t)
        d = max(d, abs(i / n - f), abs((i + 1) / n - f))
    return d
