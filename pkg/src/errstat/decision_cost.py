"""Choosing a rejection threshold by expected cost instead of convention.

A statistic falls above the critical value c -> reject. With cost_type1
charged for rejecting a good case, cost_type2 for accepting a bad one, and
a fraction prior_good of cases good, the expected cost is

    C(c) = prior * (1 - F0(c)) * cost_type1 + (1 - prior) * F1(c) * cost_type2.

For Gaussian statistics sharing sigma the minimizer has the closed form
sigma^2/(mu0 - mu1) * log[(1-prior)*cost_type2 / (prior*cost_type1)]
+ (mu0 + mu1)/2, valid when mu0 < mu1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .distributions import normal_cdf, normal_pdf, normal_quantile
from .errors import DomainError

Cdf = Callable[[float], float]


@dataclass(frozen=True)
class CostParams:
    """Error costs, prior fraction of good cases, and the two Gaussian laws.

    cost_type1: cost of rejecting a good case (type I), >= 0.
    cost_type2: cost of accepting a bad case (type II), >= 0.
    prior_good: fraction of cases that are good, in [0, 1]; the closed-form
        minimizer additionally needs it strictly inside.
    mu0/mu1/sigma: statistic means under good/bad and the shared dispersion.

    Zero costs are accepted (they make the expected cost identically easy)
    but the cost ratio and the minimizers require both strictly positive.
    """

    cost_type1: float
    cost_type2: float
    prior_good: float
    mu0: float = 0.0
    mu1: float = 1.0
    sigma: float = 1.0

    def __post_init__(self):
        for name in ("cost_type1", "cost_type2"):
            v = getattr(self, name)
            if not (v >= 0.0) or not math.isfinite(v):
                raise DomainError(f"{name} must be nonnegative and finite, got {v!r}")
        if not (0.0 <= self.prior_good <= 1.0) or math.isnan(self.prior_good):
            raise DomainError(f"prior_good must lie in [0, 1], got {self.prior_good!r}")
        if not (self.sigma > 0.0) or not math.isfinite(self.sigma):
            raise DomainError(f"sigma must be positive and finite, got {self.sigma!r}")
        for name in ("mu0", "mu1"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")

    @property
    def cost_ratio(self) -> float:
        """cost_type2 / cost_type1; needs both costs strictly positive."""
        if self.cost_type1 <= 0.0 or self.cost_type2 <= 0.0:
            raise DomainError("cost ratio needs strictly positive costs")
        return self.cost_type2 / self.cost_type1

    def null_cdf(self, c: float) -> float:
        return normal_cdf((c - self.mu0) / self.sigma)

    def alt_cdf(self, c: float) -> float:
        return normal_cdf((c - self.mu1) / self.sigma)

    def null_pdf(self, c: float) -> float:
        return normal_pdf((c - self.mu0) / self.sigma) / self.sigma

    def alt_pdf(self, c: float) -> float:
        return normal_pdf((c - self.mu1) / self.sigma) / self.sigma


def expected_cost(
    c: float,
    params: CostParams,
    null_cdf: Optional[Cdf] = None,
    alt_cdf: Optional[Cdf] = None,
) -> float:
    """Expected cost of thresholding at c.

    The two distribution handles default to the Gaussians in params; passing
    explicit cdfs is the extension seam for non-Gaussian statistics.
    """
    c = float(c)
    if not math.isfinite(c):
        raise DomainError(f"critical value must be finite, got {c!r}")
    f0 = null_cdf if null_cdf is not None else params.null_cdf
    f1 = alt_cdf if alt_cdf is not None else params.alt_cdf
    return (params.prior_good * (1.0 - f0(c)) * params.cost_type1
            + (1.0 - params.prior_good) * f1(c) * params.cost_type2)


def cost_derivative(c: float, params: CostParams) -> float:
    """d/dc of expected_cost for the Gaussian pair."""
    c = float(c)
    if not math.isfinite(c):
        raise DomainError(f"critical value must be finite, got {c!r}")
    return (-params.prior_good * params.cost_type1 * params.null_pdf(c)
            + (1.0 - params.prior_good) * params.cost_type2 * params.alt_pdf(c))


def closed_form_minimizer(params: CostParams) -> float:
    """Cost-minimizing critical value for Gaussian statistics with mu0 < mu1."""
    if not (params.mu0 < params.mu1):
        raise DomainError(
            f"closed-form minimizer requires mu0 < mu1, got mu0={params.mu0}, mu1={params.mu1}"
        )
    phi = params.prior_good
    if not (0.0 < phi < 1.0):
        raise DomainError(
            f"closed-form minimizer requires 0 < prior_good < 1, got {phi!r}"
        )
    if params.cost_type1 <= 0.0 or params.cost_type2 <= 0.0:
        raise DomainError("closed-form minimizer requires strictly positive costs")
    log_term = math.log((1.0 - phi) * params.cost_type2 / (phi * params.cost_type1))
    return (params.sigma ** 2 / (params.mu0 - params.mu1) * log_term
            + 0.5 * (params.mu0 + params.mu1))


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def numeric_minimizer(params: CostParams) -> float:
    """Golden-section search over [mu0 - 10 sigma, mu1 + 10 sigma], Newton-polished.

    Independent of the closed form; the CLI prints both and their gap.
    """
    lo = min(params.mu0, params.mu1) - 10.0 * params.sigma
    hi = max(params.mu0, params.mu1) + 10.0 * params.sigma
    a, b = lo, hi
    c1 = b - _GOLDEN * (b - a)
    c2 = a + _GOLDEN * (b - a)
    f1, f2 = expected_cost(c1, params), expected_cost(c2, params)
    for _ in range(200):
        if b - a < 1e-10:
            break
        if f1 <= f2:
            b, c2, f2 = c2, c1, f1
            c1 = b - _GOLDEN * (b - a)
            f1 = expected_cost(c1, params)
        else:
            a, c1, f1 = c1, c2, f2
            c2 = a + _GOLDEN * (b - a)
            f2 = expected_cost(c2, params)
    x = 0.5 * (a + b)
    # Newton polish on the derivative; the second derivative at an interior
    # minimum is positive, so a couple of steps suffice.
    for _ in range(8):
        d1 = cost_derivative(x, params)
        d2 = _cost_second_derivative(x, params)
        if d2 <= 0.0 or not math.isfinite(d2):
            break
        step = d1 / d2
        if not math.isfinite(step) or abs(step) > (hi - lo):
            break
        x -= step
        if abs(step) < 1e-13 * max(1.0, abs(x)):
            break
    return min(max(x, lo), hi)


def _cost_second_derivative(c: float, params: CostParams) -> float:
    var = params.sigma ** 2
    return (params.prior_good * params.cost_type1 * (c - params.mu0) / var * params.null_pdf(c)
            - (1.0 - params.prior_good) * params.cost_type2 * (c - params.mu1) / var * params.alt_pdf(c))


class CostTrend(Enum):
    INCREASING_IN_ALPHA = "increasing_in_alpha"
    DECREASING_IN_ALPHA = "decreasing_in_alpha"
    STATIONARY = "stationary"


def cost_monotonicity_region(c: float, params: CostParams, tol: float = 1e-9) -> CostTrend:
    """Classify how the expected cost responds to raising alpha at this threshold.

    The cost rises with alpha iff cost_ratio*(1-prior)/prior is below the
    density ratio f0(c)/f1(c); the gap between those two sides is compared
    against tol, and |gap| <= tol reports the stationary point.
    """
    c = float(c)
    if not math.isfinite(c):
        raise DomainError(f"critical value must be finite, got {c!r}")
    phi = params.prior_good
    if not (0.0 < phi < 1.0):
        raise DomainError(f"classification requires 0 < prior_good < 1, got {phi!r}")
    lhs = params.cost_ratio * (1.0 - phi) / phi
    # Density ratio computed in log space so deep-tail thresholds stay finite.
    log_ratio = ((c - params.mu1) ** 2 - (c - params.mu0) ** 2) / (2.0 * params.sigma ** 2)
    rhs = math.exp(log_ratio)
    gap = lhs - rhs
    if abs(gap) <= tol:
        return CostTrend.STATIONARY
    return CostTrend.INCREASING_IN_ALPHA if gap < 0.0 else CostTrend.DECREASING_IN_ALPHA


def alpha_from_critical(c: float, params: CostParams) -> float:
    """Type I error probability implied by the threshold: 1 - F0(c)."""
    c = float(c)
    if not math.isfinite(c):
        raise DomainError(f"critical value must be finite, got {c!r}")
    return 1.0 - params.null_cdf(c)


def critical_from_alpha(alpha: float, params: CostParams) -> float:
    """Threshold whose type I error equals alpha (inverse of alpha_from_critical)."""
    alpha = float(alpha)
    if not (0.0 < alpha < 1.0) or math.isnan(alpha):
        raise DomainError(f"alpha must lie strictly inside (0, 1), got {alpha!r}")
    return params.mu0 - params.sigma * normal_quantile(alpha)
