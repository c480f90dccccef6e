"""Type I / type II error trade-off for a Gaussian one-sample test.

For a test of level ``alpha`` against a standardized effect ``delta`` with
``n`` observations, the one-sided-upper type II error probability is
``Phi(z_{1-alpha} - sqrt(n)*delta)``; the two-sided variant splits alpha
across both tails. The sample-size formula inverts the one-sided relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .distributions import normal_cdf, normal_quantile
from .errors import DomainError


class Tail(Enum):
    ONE_SIDED_UPPER = "one_sided_upper"
    TWO_SIDED = "two_sided"


@dataclass(frozen=True)
class GaussianTestModel:
    """One-sample Gaussian test design: effect size delta = mu/sigma and sample count."""

    effect_size: float
    n: int = 1
    tail: Tail = Tail.ONE_SIDED_UPPER

    def __post_init__(self):
        if not math.isfinite(self.effect_size):
            raise DomainError(f"effect_size must be finite, got {self.effect_size!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")

    @property
    def noncentrality(self) -> float:
        """Mean of the test statistic under the alternative: sqrt(n) * delta."""
        return math.sqrt(self.n) * self.effect_size


def _check_prob_open(value: float, name: str) -> float:
    value = float(value)
    if not (0.0 < value < 1.0) or math.isnan(value):
        raise DomainError(f"{name} must lie strictly inside (0, 1), got {value!r}")
    return value


def type2_error(alpha: float, model: GaussianTestModel) -> float:
    """Probability of failing to reject at level alpha when the effect is real."""
    alpha = _check_prob_open(alpha, "alpha")
    shift = model.noncentrality
    # z_{1-alpha} as -quantile(alpha): exact by symmetry, no 1 - alpha rounding
    if model.tail is Tail.ONE_SIDED_UPPER:
        crit = -normal_quantile(alpha)
        return normal_cdf(crit - shift)
    crit = -normal_quantile(0.5 * alpha)
    return normal_cdf(crit - shift) - normal_cdf(-crit - shift)


def power(alpha: float, model: GaussianTestModel) -> float:
    """1 - type2_error: probability the test detects the modeled effect."""
    return 1.0 - type2_error(alpha, model)


def required_sample_size(alpha: float, beta: float, mu_star: float, sigma: float) -> int:
    """Smallest n giving power >= 1 - beta against an effect of magnitude mu_star.

    Evaluates ceil({sigma * (z_{1-alpha} + z_{1-beta}) / mu_star}**2) for the
    one-sided-upper test. Raises DomainError for mu_star == 0, where no
    finite sample size exists.
    """
    alpha = _check_prob_open(alpha, "alpha")
    beta = _check_prob_open(beta, "beta")
    mu_star = float(mu_star)
    if not math.isfinite(mu_star) or mu_star == 0.0:
        raise DomainError(f"mu_star must be finite and nonzero, got {mu_star!r}")
    sigma = float(sigma)
    if not (sigma > 0.0) or not math.isfinite(sigma):
        raise DomainError(f"sigma must be positive and finite, got {sigma!r}")
    z_sum = -(normal_quantile(alpha) + normal_quantile(beta))
    n_real = (sigma * z_sum / mu_star) ** 2
    return max(1, math.ceil(n_real))
