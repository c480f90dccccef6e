"""
From a short annual series to a warranted claim
===============================================

A twenty-point series regressed on its own past gives a slope, a standard
error, and a p-value; severity then says which slope values the data
actually rule in. The same report is available from the command line:

    errstat analyze --csv series.csv --tau 5
    errstat analyze --estimate 0.5782 --stderr 0.1654 --n 15 --claim 0.30529
"""

import random

from errstat import (
    ClaimDirection,
    ObservedResult,
    Series,
    SeverityClaim,
    SummaryStats,
    autocorrelation,
    confidence_lower_limit,
    lag_regression,
    p_value_from_summary,
    reproducibility_probability,
    severity,
    severity_curve,
)

# Synthesize an annual series with a 5-year echo plus noise.
rng = random.Random(20250109)
values = [rng.gauss(0.3, 0.08) for _ in range(5)]
for _ in range(15):
    values.append(0.6 * values[-5] + 0.12 + rng.gauss(0.0, 0.025))
series = Series.from_values(values, start_label=2001)

fit = lag_regression(series, tau=5)
print(f"lag-5 slope {fit.beta1:.4f} (se {fit.stderr_beta1:.4f}), "
      f"r={fit.r:.4f}, t={fit.t_stat:.3f}, p={fit.p_two_sided_t:.4g}")
print("lag-5 correlation:", round(autocorrelation(series, 5), 4))

# The same inference pieces from reported summary statistics alone.
stats = SummaryStats(estimate=0.5782, stderr=0.1654, n=15)
print("\nsummary-statistics workflow:")
print("  one-sided p:", f"{p_value_from_summary(stats):.3g}")

# The 95% lower limit and the severity of the matching one-sided claim.
limit = confidence_lower_limit(stats, 0.95)
print("  95% lower confidence limit:", round(limit, 5))
claim = SeverityClaim(ClaimDirection.GREATER_THAN, 0.30529)
print("  severity of 'slope > 0.30529':", round(severity(stats, claim), 4))

# Probing further: severity across candidate bounds.
for bound, sev in severity_curve(stats, [0.2, 0.3, 0.4, 0.5, 0.5782]):
    print(f"    slope > {bound:<7.4f} warranted with severity {sev:.3f}")

# And the chance a repeat study at alpha = 0.05 would reject again.
observed = ObservedResult.from_summary(stats.estimate, stats.stderr)
print("  replication probability:", round(reproducibility_probability(observed, 0.05), 4))
