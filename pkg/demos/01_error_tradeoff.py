"""
Trading type I against type II errors
=====================================

A one-sample Gaussian test can only shrink its false-alarm rate by growing
its miss rate. This script walks the curve and shows what it costs in
sample size to have both small.
"""

from errstat import GaussianTestModel, power, required_sample_size, type2_error

# A modest standardized effect, ten observations.
model = GaussianTestModel(effect_size=0.5, n=10)

print("alpha      beta       power")
for alpha in (0.2, 0.1, 0.05, 0.01, 0.005, 0.001):
    beta = type2_error(alpha, model)
    print(f"{alpha:<10.3f} {beta:<10.4f} {1 - beta:.4f}")

# Tightening alpha tenfold (0.05 -> 0.005) at this design pushes beta from
# about 0.53 to 0.77: most real effects of this size would go undetected.

# To keep power at 0.8 while tightening the threshold, the sample has to grow:
for alpha in (0.05, 0.005):
    n = required_sample_size(alpha, beta=0.2, mu_star=0.5, sigma=1.0)
    achieved = power(alpha, GaussianTestModel(effect_size=0.5, n=n))
    print(f"alpha={alpha}: need n={n} (power {achieved:.3f})")

# Doubling the noise quadruples the bill.
print("sigma=2 ->", required_sample_size(0.05, 0.2, mu_star=0.5, sigma=2.0), "observations")
