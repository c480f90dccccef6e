"""
What p-values do when the effect is real
========================================

Under the null the p-value is uniform; under an alternative it piles up
near zero, faster for bigger effects and samples. The distribution
function doubles as the power of the test, and evaluated at an observed
effect size it becomes a replication probability.
"""

from errstat import (
    AlternativeSpec,
    GaussianTestModel,
    ObservedResult,
    cdf_under_alternative,
    pdf_under_alternative,
    power,
    reproducibility_probability,
)

null = AlternativeSpec(delta=0.0, n=10)
real = AlternativeSpec(delta=0.5, n=10)

print("p        density(null)  density(effect)  cdf(effect)")
for p in (0.001, 0.01, 0.05, 0.2, 0.5):
    print(f"{p:<8.3f} {pdf_under_alternative(p, null):<14.1f} "
          f"{pdf_under_alternative(p, real):<16.3f} "
          f"{cdf_under_alternative(p, real):.4f}")

# The cdf at the significance level IS the power of the test.
print("\ncdf at 0.05:", cdf_under_alternative(0.05, real))
print("power:      ", power(0.05, GaussianTestModel(0.5, 10)))

# Concentration grows with sample size: the share of p-values under 0.05.
for n in (5, 10, 20, 50):
    mass = cdf_under_alternative(0.05, AlternativeSpec(0.5, n))
    print(f"n={n:<3d} mass below 0.05: {mass:.3f}")

# Taking an observed statistic at face value, how likely is a repeat study
# at the same level to reject again? A just-significant result: a coin flip.
for p_obs in (0.05, 0.01, 0.001):
    observed = ObservedResult.from_p_value(p_obs)
    prob = reproducibility_probability(observed, alpha=0.05)
    print(f"observed p={p_obs}: replication probability {prob:.3f}")
