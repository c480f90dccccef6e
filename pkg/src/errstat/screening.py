"""Diagnostic-screening model of the false positive rate.

Mixes the significance level alpha, power 1 - beta, and the prevalence of
true nulls into the posterior probability that a rejection is wrong:

    fpr = alpha * prior / (alpha * prior + power * (1 - prior))

with an equivalent prior-odds form alpha / (alpha + power * R). Also covers
the sensitivity of that rate to alpha and beta, the coupled curve where
beta honors the Gaussian trade-off, and the true-positive-rate arithmetic
behind "cut the threshold by r to multiply the replication rate n-fold".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import error_tradeoff
from .errors import DomainError, InfeasibleParameterError


def _check_prob_open(value: float, name: str) -> float:
    value = float(value)
    if not (0.0 < value < 1.0) or math.isnan(value):
        raise DomainError(f"{name} must lie strictly inside (0, 1), got {value!r}")
    return value


@dataclass(frozen=True)
class ScreeningParams:
    """Level, power, and prior probability that the tested null is true."""

    alpha: float
    power: float
    prior_null: float

    def __post_init__(self):
        _check_prob_open(self.alpha, "alpha")
        _check_prob_open(self.power, "power")
        # Degenerate priors are rejected: at 0 or 1 the rate is identically
        # 0 or 1 and the derivative formulas lose their sign guarantees.
        _check_prob_open(self.prior_null, "prior_null")

    @property
    def prior_odds(self) -> "PriorOdds":
        return PriorOdds((1.0 - self.prior_null) / self.prior_null)


@dataclass(frozen=True)
class PriorOdds:
    """Odds R that a tested hypothesis's alternative is true, R = (1-prior)/prior."""

    ratio: float

    def __post_init__(self):
        if not (self.ratio > 0.0) or not math.isfinite(self.ratio):
            raise DomainError(f"odds ratio must be positive and finite, got {self.ratio!r}")

    @classmethod
    def from_prior_null(cls, prior_null: float) -> "PriorOdds":
        _check_prob_open(prior_null, "prior_null")
        return cls((1.0 - prior_null) / prior_null)

    @property
    def prior_null(self) -> float:
        return 1.0 / (1.0 + self.ratio)


def false_positive_rate(params: ScreeningParams) -> float:
    """Posterior probability the null is true given a rejection."""
    num = params.alpha * params.prior_null
    return num / (num + params.power * (1.0 - params.prior_null))


def false_positive_rate_odds(alpha: float, power: float, odds: PriorOdds) -> float:
    """Prior-odds form alpha / (alpha + power * R); exactly 1/2 on the boundary R = alpha/power."""
    alpha = _check_prob_open(alpha, "alpha")
    power = _check_prob_open(power, "power")
    return alpha / (alpha + power * odds.ratio)


def fpr_gradient(params: ScreeningParams) -> tuple[float, float]:
    """Partial derivatives of the rate with respect to alpha and beta.

    Both are strictly positive on the open parameter cube, which is what
    makes "lower alpha, lower false positive rate" unconditional in this
    model. Returns (d/d_alpha, d/d_beta).
    """
    phi = params.prior_null
    denom = params.alpha * phi + params.power * (1.0 - phi)
    denom_sq = denom * denom
    d_alpha = phi * params.power * (1.0 - phi) / denom_sq
    d_beta = params.alpha * phi * (1.0 - phi) / denom_sq
    return d_alpha, d_beta


def combined_fpr_curve(
    effect_size: float,
    n: int,
    prior_null: float,
    alphas: Sequence[float],
) -> list[tuple[float, float, float]]:
    """False positive rate along alphas with beta coupled to the trade-off.

    Unlike the plain screening formula (where beta is a free scalar), each
    point recomputes beta = type2_error(alpha) for the given effect size
    and sample count before applying the rate. Returns
    [(alpha, beta, fpr), ...] in input order.
    """
    _check_prob_open(prior_null, "prior_null")
    model = error_tradeoff.GaussianTestModel(effect_size=effect_size, n=n)
    out = []
    for alpha in alphas:
        beta = error_tradeoff.type2_error(alpha, model)
        fpr = false_positive_rate(ScreeningParams(alpha, 1.0 - beta, prior_null))
        out.append((float(alpha), beta, fpr))
    return out


def replication_threshold_factor(gamma: float, n_fold: float) -> float:
    """Factor by which the threshold must shrink to raise the true positive rate n-fold.

    gamma is the current true positive rate Pr(alternative | rejection); the
    answer n_fold*(1-gamma)/(1-n_fold*gamma) does not depend on power or the
    prior odds (they cancel). Only possible while n_fold*gamma < 1.
    """
    gamma = float(gamma)
    if not (0.0 < gamma < 1.0) or math.isnan(gamma):
        raise DomainError(f"gamma must lie strictly inside (0, 1), got {gamma!r}")
    n_fold = float(n_fold)
    if not (n_fold >= 1.0) or not math.isfinite(n_fold):
        raise DomainError(f"n_fold must be >= 1, got {n_fold!r}")
    if n_fold * gamma >= 1.0:
        raise InfeasibleParameterError(
            f"a true positive rate of {gamma} cannot be raised {n_fold}-fold: "
            f"that requires gamma < 1/{n_fold}"
        )
    return n_fold * (1.0 - gamma) / (1.0 - n_fold * gamma)


def gamma_for_factor(r: float, n_fold: float) -> float:
    """True positive rate at which a threshold cut by factor r raises it n-fold.

    Inverts replication_threshold_factor: gamma = (r - n)/(n*(r - 1)).
    Requires r > n_fold; n_fold == 1 is degenerate (the factor is then
    identically 1, so no r > 1 is attainable).
    """
    r = float(r)
    n_fold = float(n_fold)
    if not (n_fold >= 1.0) or not math.isfinite(n_fold):
        raise DomainError(f"n_fold must be >= 1, got {n_fold!r}")
    if not (r > n_fold):
        raise InfeasibleParameterError(
            f"threshold factor r must exceed n_fold (got r={r}, n_fold={n_fold}): "
            "shrinking the threshold cannot raise the rate by more than the factor itself"
        )
    gamma = (r - n_fold) / (n_fold * (r - 1.0))
    if not (gamma < 1.0 / n_fold):
        raise InfeasibleParameterError(
            f"no feasible true positive rate: n_fold={n_fold} admits none below 1/{n_fold}"
        )
    return gamma
