"""Severity assessment for directional claims about a scalar parameter.

Given a point estimate with a standard error, the severity of the claim
"parameter > bound" is the probability of a worse-fitting estimate (one
below the observed value) if the parameter sat exactly at the bound:
cdf((estimate - bound) / stderr). It is the post-data complement of the
usual pre-data error probabilities and is dual to one-sided confidence
limits: the severity at the level-L lower limit is exactly L.

The reference distribution is normal by default; Student-t (df = n - 2 for
the lag-regression context) is available for the same operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .distributions import normal_cdf, normal_quantile, student_t_cdf, student_t_quantile
from .error_tradeoff import Tail
from .errors import DomainError


class ReferenceDist(Enum):
    NORMAL = "normal"
    STUDENT_T = "student_t"


class ClaimDirection(Enum):
    GREATER_THAN = "greater_than"
    LESS_THAN = "less_than"


@dataclass(frozen=True)
class SummaryStats:
    """Point estimate, its standard error, and the sizes behind them.

    n is the number of observations; df defaults to n - 2 (the residual
    degrees of freedom of a two-parameter regression) when only n is given.
    Both may be omitted for purely normal-reference workflows.
    """

    estimate: float
    stderr: float
    n: Optional[int] = None
    df: Optional[int] = None

    def __post_init__(self):
        if not math.isfinite(self.estimate):
            raise DomainError(f"estimate must be finite, got {self.estimate!r}")
        if not (self.stderr > 0.0) or not math.isfinite(self.stderr):
            raise DomainError(f"stderr must be positive and finite, got {self.stderr!r}")
        for name in ("n", "df"):
            v = getattr(self, name)
            if v is not None and (not isinstance(v, int) or isinstance(v, bool) or v < 1):
                raise DomainError(f"{name} must be a positive integer, got {v!r}")

    @property
    def standardized(self) -> float:
        """estimate / stderr, the observed test statistic against zero."""
        return self.estimate / self.stderr

    def effective_df(self) -> int:
        if self.df is not None:
            return self.df
        if self.n is not None:
            if self.n < 3:
                raise DomainError(f"n = {self.n} leaves no residual degrees of freedom")
            return self.n - 2
        raise DomainError("Student-t reference needs df (or n to derive df = n - 2)")


@dataclass(frozen=True)
class SeverityClaim:
    """A one-sided claim about the parameter: direction relative to a bound."""

    direction: ClaimDirection
    bound: float

    def __post_init__(self):
        if not math.isfinite(self.bound):
            raise DomainError(f"claim bound must be finite, got {self.bound!r}")


def _reference_cdf(z: float, stats: SummaryStats, reference: ReferenceDist) -> float:
    if reference is ReferenceDist.NORMAL:
        return normal_cdf(z)
    return student_t_cdf(z, stats.effective_df())


def severity(stats: SummaryStats, claim: SeverityClaim,
             reference: ReferenceDist = ReferenceDist.NORMAL) -> float:
    """Probability the data would have fit the claim worse were it false."""
    z = (stats.estimate - claim.bound) / stats.stderr
    sev = _reference_cdf(z, stats, reference)
    if claim.direction is ClaimDirection.GREATER_THAN:
        return sev
    return 1.0 - sev


def severity_curve(stats: SummaryStats, bounds: Sequence[float],
                   reference: ReferenceDist = ReferenceDist.NORMAL,
                   direction: ClaimDirection = ClaimDirection.GREATER_THAN,
                   ) -> list[tuple[float, float]]:
    """Severity at each bound, for probing which parameter values are warranted."""
    return [
        (float(b), severity(stats, SeverityClaim(direction, float(b)), reference))
        for b in bounds
    ]


def confidence_lower_limit(stats: SummaryStats, level: float,
                           reference: ReferenceDist = ReferenceDist.NORMAL) -> float:
    """One-sided lower confidence limit; severity of 'parameter > limit' equals level."""
    level = float(level)
    if not (0.0 < level < 1.0) or math.isnan(level):
        raise DomainError(f"level must lie strictly inside (0, 1), got {level!r}")
    if reference is ReferenceDist.NORMAL:
        q = normal_quantile(level)
    else:
        q = student_t_quantile(level, stats.effective_df())
    return stats.estimate - q * stats.stderr


def p_value_from_summary(stats: SummaryStats, tail: Tail = Tail.ONE_SIDED_UPPER,
                         reference: ReferenceDist = ReferenceDist.NORMAL) -> float:
    """p-value for the point null 'parameter = 0' from the summary statistics."""
    d = stats.standardized
    if tail is Tail.ONE_SIDED_UPPER:
        # Symmetric reference, so the upper tail beyond d is the cdf at -d;
        # this form stays accurate when d is large.
        return _reference_cdf(-d, stats, reference)
    return 2.0 * _reference_cdf(-abs(d), stats, reference)
