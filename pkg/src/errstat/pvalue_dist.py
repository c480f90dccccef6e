"""Distribution of the p-value when the effect is real, and replication odds.

Under the null the p-value is uniform on (0, 1). Under a standardized
effect delta with n observations the one-sided-upper law has density
pdf(p) = phi(z_{1-p} - sqrt(n)*delta) / phi(z_{1-p}) and distribution
cdf(p) = 1 - Phi(z_{1-p} - sqrt(n)*delta); the value of the cdf at the
significance level is exactly the power of the test. The replication
probability evaluates that same cdf at the observed effect size, by
default under the two-sided convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import normal_cdf, normal_pdf, normal_quantile
from .error_tradeoff import Tail
from .errors import DomainError


@dataclass(frozen=True)
class AlternativeSpec:
    """Effect size delta = mu/sigma and sample count defining the alternative."""

    delta: float
    n: int = 1

    def __post_init__(self):
        if not math.isfinite(self.delta):
            raise DomainError(f"delta must be finite, got {self.delta!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")

    @property
    def noncentrality(self) -> float:
        return math.sqrt(self.n) * self.delta


def _check_p_open(p: float) -> float:
    p = float(p)
    if not (0.0 < p < 1.0) or math.isnan(p):
        raise DomainError(f"p must lie strictly inside (0, 1), got {p!r}")
    return p


def pdf_under_alternative(p: float, spec: AlternativeSpec,
                          tail: Tail = Tail.ONE_SIDED_UPPER) -> float:
    """Density of the p-value at p; constant 1 when delta = 0."""
    p = _check_p_open(p)
    m = spec.noncentrality
    # z_{1-p} computed as -quantile(p) so tiny p keeps full precision.
    if tail is Tail.ONE_SIDED_UPPER:
        z = -normal_quantile(p)
        return normal_pdf(z - m) / normal_pdf(z)
    z = -normal_quantile(0.5 * p)
    return (normal_pdf(z - m) + normal_pdf(z + m)) / (2.0 * normal_pdf(z))


def cdf_under_alternative(p: float, spec: AlternativeSpec,
                          tail: Tail = Tail.ONE_SIDED_UPPER) -> float:
    """Probability of observing a p-value below p when the effect is real."""
    p = _check_p_open(p)
    m = spec.noncentrality
    if tail is Tail.ONE_SIDED_UPPER:
        z = -normal_quantile(p)
        return 1.0 - normal_cdf(z - m)
    z = -normal_quantile(0.5 * p)
    return normal_cdf(m - z) + normal_cdf(-z - m)


def quantile_under_alternative(q: float, spec: AlternativeSpec) -> float:
    """Inverse of the one-sided cdf: the p-value below which a fraction q falls."""
    q = _check_p_open(q)
    return normal_cdf(normal_quantile(q) - spec.noncentrality)


@dataclass(frozen=True)
class ObservedResult:
    """An observed test outcome carried as the statistic d = sqrt(n) * delta_obs.

    Build it from exactly one of: the statistic itself, a two-sided p-value
    (d = -Phi^{-1}(p/2)), or an (estimate, stderr) pair (d = estimate/stderr).
    """

    d_observed: float

    def __post_init__(self):
        if not math.isfinite(self.d_observed):
            raise DomainError(f"d_observed must be finite, got {self.d_observed!r}")

    @classmethod
    def from_statistic(cls, d_observed: float) -> "ObservedResult":
        return cls(float(d_observed))

    @classmethod
    def from_p_value(cls, p_observed: float) -> "ObservedResult":
        p_observed = float(p_observed)
        if not (0.0 < p_observed < 1.0) or math.isnan(p_observed):
            raise DomainError(
                f"p_observed must lie strictly inside (0, 1), got {p_observed!r}"
            )
        return cls(-normal_quantile(0.5 * p_observed))

    @classmethod
    def from_summary(cls, estimate: float, stderr: float) -> "ObservedResult":
        stderr = float(stderr)
        if not (stderr > 0.0) or not math.isfinite(stderr):
            raise DomainError(f"stderr must be positive and finite, got {stderr!r}")
        estimate = float(estimate)
        if not math.isfinite(estimate):
            raise DomainError(f"estimate must be finite, got {estimate!r}")
        return cls(estimate / stderr)

    @property
    def p_observed(self) -> float:
        """Two-sided p-value implied by the statistic."""
        return 2.0 * normal_cdf(-abs(self.d_observed))


def reproducibility_probability(observed: ObservedResult, alpha: float,
                                tail: Tail = Tail.TWO_SIDED) -> float:
    """Chance a fresh study at level alpha rejects, taking the observed effect as real.

    Two-sided (default): Phi(d_o - z_{1-alpha/2}) + Phi(-z_{1-alpha/2} - d_o).
    One-sided upper: Phi(d_o - z_{1-alpha}). Equals alpha when d_o = 0.
    """
    alpha = float(alpha)
    if not (0.0 < alpha < 1.0) or math.isnan(alpha):
        raise DomainError(f"alpha must lie strictly inside (0, 1), got {alpha!r}")
    d_o = observed.d_observed
    if tail is Tail.ONE_SIDED_UPPER:
        return normal_cdf(d_o + normal_quantile(alpha))
    crit = -normal_quantile(0.5 * alpha)
    return normal_cdf(d_o - crit) + normal_cdf(-crit - d_o)
