"""Lagged self-regression for short annual series.

Fits Y_t = b0 + b1 * Y_{t-tau} by ordinary least squares over the
overlapping pairs, reports the slope with its standard error, and converts
a lag correlation into the t statistic r*sqrt(k-2)/sqrt(1-r^2) with k-2
degrees of freedom, where k is the number of pairs.

The correlation convention matches the regression: each window gets its
own mean and variance, so r, the slope t, and the regression p-value are
mutually consistent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, Union

from .distributions import student_t_cdf
from .errors import CsvFormatError, DegenerateDataError, DomainError
from .severity import SummaryStats

# Relative residual variance below which a fit is reported as exact
# (perfect correlation) instead of yielding a meaningless standard error.
_PERFECT_FIT_RTOL = 1e-12


@dataclass(frozen=True)
class Series:
    """An ordered run of values with integer labels (e.g. years), no gaps."""

    values: tuple[float, ...]
    start_label: int = 0

    def __post_init__(self):
        if len(self.values) < 3:
            raise DomainError(f"series needs at least 3 values, got {len(self.values)}")
        for i, v in enumerate(self.values):
            if not math.isfinite(v):
                raise DomainError(f"series value at index {i} is not finite: {v!r}")

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def from_values(cls, values: Sequence[float], start_label: int = 0) -> "Series":
        return cls(tuple(float(v) for v in values), start_label)


def read_series_csv(path: Union[str, Path]) -> Series:
    """Read a `label,value` CSV (header required, UTF-8, '.' decimals).

    Labels must be consecutive integers; a gap means a missing year and is
    rejected rather than imputed. All parse errors carry the 1-based line
    number.
    """
    # utf-8-sig so a leading BOM from spreadsheet exports is tolerated
    text = Path(path).read_text(encoding="utf-8-sig")
    lines = text.splitlines()
    if not lines:
        raise CsvFormatError(1, "empty file; expected a 'label,value' header")
    header = [part.strip().lower() for part in lines[0].split(",")]
    if header != ["label", "value"]:
        raise CsvFormatError(1, f"expected header 'label,value', got {lines[0]!r}")
    labels: list[int] = []
    values: list[float] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split(",")
        if len(parts) != 2:
            raise CsvFormatError(lineno, f"expected 2 comma-separated fields, got {len(parts)}")
        label_text, value_text = parts[0].strip(), parts[1].strip()
        try:
            label = int(label_text)
        except ValueError:
            raise CsvFormatError(lineno, f"label {label_text!r} is not an integer") from None
        if not value_text:
            raise CsvFormatError(lineno, "missing value (blank field)")
        try:
            value = float(value_text)
        except ValueError:
            raise CsvFormatError(lineno, f"value {value_text!r} is not a number") from None
        if not math.isfinite(value):
            raise CsvFormatError(lineno, f"value {value_text!r} is not finite")
        if labels and label != labels[-1] + 1:
            raise CsvFormatError(
                lineno, f"label {label} breaks the sequence (previous was {labels[-1]})"
            )
        labels.append(label)
        values.append(value)
    if len(values) < 3:
        raise CsvFormatError(len(lines), f"series needs at least 3 rows, got {len(values)}")
    return Series(tuple(values), start_label=labels[0])


@dataclass(frozen=True)
class LagFit:
    """OLS results for Y_t on Y_{t-tau}: intercept, slope, and inference pieces."""

    beta0: float
    beta1: float
    stderr_beta1: float
    r: float
    n_pairs: int
    t_stat: float
    p_two_sided_t: float

    def summary_stats(self) -> SummaryStats:
        """Slope estimate packaged for the severity/confidence workflow."""
        return SummaryStats(
            estimate=self.beta1,
            stderr=self.stderr_beta1,
            n=self.n_pairs,
            df=self.n_pairs - 2,
        )


def _lag_pairs(series: Series, tau: int) -> tuple[list[float], list[float]]:
    vals = series.values
    return list(vals[: len(vals) - tau]), list(vals[tau:])


def lag_regression(series: Series, tau: int) -> LagFit:
    """Least-squares fit of each value on its tau-steps-earlier predecessor."""
    if not isinstance(tau, int) or isinstance(tau, bool) or tau < 1:
        raise DomainError(f"tau must be a positive integer, got {tau!r}")
    if tau >= len(series) - 2:
        raise DomainError(
            f"tau = {tau} leaves fewer than 3 pairs from {len(series)} values"
        )
    x, y = _lag_pairs(series, tau)
    k = len(x)
    mean_x = math.fsum(x) / k
    mean_y = math.fsum(y) / k
    sxx = math.fsum((xi - mean_x) ** 2 for xi in x)
    syy = math.fsum((yi - mean_y) ** 2 for yi in y)
    sxy = math.fsum((xi - mean_x) * (yi - mean_y) for xi, yi in zip(x, y))
    if sxx == 0.0:
        raise DegenerateDataError("predictor window has zero variance (constant series)")
    if syy == 0.0:
        raise DegenerateDataError("response window has zero variance (constant series)")
    beta1 = sxy / sxx
    beta0 = mean_y - beta1 * mean_x
    rss = syy - beta1 * sxy
    if rss <= _PERFECT_FIT_RTOL * syy:
        raise DegenerateDataError(
            "residual variance is zero (perfect fit, |r| = 1); "
            "slope inference is undefined"
        )
    df = k - 2
    stderr = math.sqrt((rss / df) / sxx)
    r = sxy / math.sqrt(sxx * syy)
    t_stat = beta1 / stderr
    p = 2.0 * student_t_cdf(-abs(t_stat), df)
    return LagFit(
        beta0=beta0,
        beta1=beta1,
        stderr_beta1=stderr,
        r=r,
        n_pairs=k,
        t_stat=t_stat,
        p_two_sided_t=p,
    )


def autocorrelation(series: Series, tau: int) -> float:
    """Sample correlation of the lag-tau pairs (tau = 0 returns 1 by convention)."""
    if not isinstance(tau, int) or isinstance(tau, bool) or tau < 0:
        raise DomainError(f"tau must be a nonnegative integer, got {tau!r}")
    if tau >= len(series) - 1:
        raise DomainError(f"tau = {tau} leaves fewer than 2 pairs from {len(series)} values")
    x, y = _lag_pairs(series, tau) if tau > 0 else (list(series.values), list(series.values))
    k = len(x)
    mean_x = math.fsum(x) / k
    mean_y = math.fsum(y) / k
    sxx = math.fsum((xi - mean_x) ** 2 for xi in x)
    syy = math.fsum((yi - mean_y) ** 2 for yi in y)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateDataError("zero variance in a lag window; correlation undefined")
    if tau == 0:
        return 1.0
    sxy = math.fsum((xi - mean_x) * (yi - mean_y) for xi, yi in zip(x, y))
    return sxy / math.sqrt(sxx * syy)


def t_from_correlation(r: float, n: int) -> tuple[float, float]:
    """t statistic and two-sided p-value for a correlation from n observations."""
    r = float(r)
    if not math.isfinite(r) or not (-1.0 <= r <= 1.0):
        raise DomainError(f"correlation must lie in [-1, 1], got {r!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise DomainError(f"n must be an integer >= 3, got {n!r}")
    if abs(r) == 1.0:
        raise DegenerateDataError("correlation of +/-1 gives an infinite t statistic")
    t = r * math.sqrt(n - 2) / math.sqrt(1.0 - r * r)
    p = 2.0 * student_t_cdf(-abs(t), n - 2)
    return t, p
