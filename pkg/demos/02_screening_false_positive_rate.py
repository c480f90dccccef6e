"""
The diagnostic-screening view of significance tests
===================================================

Mixing the significance level with power and a prevalence of true nulls
turns error probabilities into a posterior: the chance that a rejection is
a false alarm. This drives the argument for tightening thresholds, and
also this model's main subtlety: beta quietly moves when alpha does.
"""

from errstat import (
    PriorOdds,
    ScreeningParams,
    combined_fpr_curve,
    false_positive_rate,
    false_positive_rate_odds,
    fpr_gradient,
    gamma_for_factor,
    replication_threshold_factor,
)

# With even odds and decent power, one rejection in seventeen is wrong.
params = ScreeningParams(alpha=0.05, power=0.8, prior_null=0.5)
print("fpr at alpha=0.05, power=0.8, prior 0.5:", round(false_positive_rate(params), 4))

# At 1:10 prior odds for the alternative the picture darkens considerably,
# and a tenfold alpha cut repairs it.
for alpha in (0.05, 0.005):
    fpr = false_positive_rate_odds(alpha, 0.8, PriorOdds(0.1))
    print(f"  odds 1:10, alpha={alpha}: fpr={fpr:.4f}")

# Both sensitivities are positive: lowering alpha always lowers the rate,
# raising beta always raises it.
print("gradient (d/d_alpha, d/d_beta):", fpr_gradient(params))

# The honest version couples beta to alpha through the Gaussian trade-off.
# The rate still falls as alpha falls, just less dramatically.
print("\nalpha     beta      fpr   (coupled, effect 0.5, n=10, prior 0.5)")
for alpha, beta, fpr in combined_fpr_curve(0.5, 10, 0.5, [0.2, 0.05, 0.005]):
    print(f"{alpha:<9.3f} {beta:<9.4f} {fpr:.4f}")

# How much must the threshold shrink to double the true positive rate?
# Entirely a function of where that rate currently sits.
for gamma in (0.2, 4.0 / 9.0):
    r = replication_threshold_factor(gamma, n_fold=2.0)
    print(f"true positive rate {gamma:.3f}: cut threshold by {r:.1f}x to double it")

# Inverted: a tenfold cut doubles the rate only if it currently sits at 4/9.
print("gamma for r=10, doubling:", gamma_for_factor(10.0, 2.0))
