"""Standard-normal and Student-t kernels used everywhere else in the package.

Self-contained on purpose: the Gaussian cdf goes through Cody's rational
Chebyshev approximations to erf/erfc (double-precision accurate on the whole
real line), the quantile starts from Acklam's approximation and is polished
with Halley steps against the cdf, and the t cdf is the regularized
incomplete beta function evaluated by a modified-Lentz continued fraction.
Everything is a pure scalar function of floats; no global state.
"""

from __future__ import annotations

import math

from .errors import DomainError

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
_INV_SQRT_PI = 0.5641895835477562869480794515607726

# Cody (1969) rational approximations for erf on [0, 0.46875] ...
_ERF_A = (3.16112374387056560e00, 1.13864154151050156e02,
          3.77485237685302021e02, 3.20937758913846947e03,
          1.85777706184603153e-1)
_ERF_B = (2.36012909523441209e01, 2.44024637934444173e02,
          1.28261652607737228e03, 2.84423683343917062e03)
# ... erfc on (0.46875, 4] ...
_ERF_C = (5.64188496988670089e-1, 8.88314979438837594e00,
          6.61191906371416295e01, 2.98635138197400131e02,
          8.81952221241769090e02, 1.71204761263407058e03,
          2.05107837782607147e03, 1.23033935479799725e03,
          2.15311535474403846e-8)
_ERF_D = (1.57449261107098347e01, 1.17693950891312499e02,
          5.37181101862009858e02, 1.62138957456669019e03,
          3.29079923573345963e03, 4.36261909014324716e03,
          3.43936767414372164e03, 1.23033935480374942e03)
# ... and erfc beyond 4.
_ERF_P = (3.05326634961232344e-1, 3.60344899949804439e-1,
          1.25781726111229246e-1, 1.60837851487422766e-2,
          6.58749161529837803e-4, 1.63153871373020978e-2)
_ERF_Q = (2.56852019228982242e00, 1.87295284992346047e00,
          5.27905102951428412e-1, 6.05183413124413191e-2,
          2.33520497626869185e-3)


def _require_finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def _erfc_positive(y: float) -> float:
    # erfc(y) for y > 0.46875; split exp(-y^2) as Cody does to keep the
    # tail accurate in relative terms.
    if y <= 4.0:
        xnum = _ERF_C[8] * y
        xden = y
        for i in range(7):
            xnum = (xnum + _ERF_C[i]) * y
            xden = (xden + _ERF_D[i]) * y
        result = (xnum + _ERF_C[7]) / (xden + _ERF_D[7])
    else:
        if y >= 26.5:
            return 0.0
        ysq = 1.0 / (y * y)
        xnum = _ERF_P[5] * ysq
        xden = ysq
        for i in range(4):
            xnum = (xnum + _ERF_P[i]) * ysq
            xden = (xden + _ERF_Q[i]) * ysq
        result = ysq * (xnum + _ERF_P[4]) / (xden + _ERF_Q[4])
        result = (_INV_SQRT_PI - result) / y
    ytrunc = math.floor(y * 16.0) / 16.0
    delta = (y - ytrunc) * (y + ytrunc)
    return math.exp(-ytrunc * ytrunc) * math.exp(-delta) * result


def _erf_small(x: float) -> float:
    # erf(x) for |x| <= 0.46875.
    ysq = x * x
    xnum = _ERF_A[4] * ysq
    xden = ysq
    for i in range(3):
        xnum = (xnum + _ERF_A[i]) * ysq
        xden = (xden + _ERF_B[i]) * ysq
    return x * (xnum + _ERF_A[3]) / (xden + _ERF_B[3])


def _erfc(x: float) -> float:
    y = abs(x)
    if y <= 0.46875:
        return 1.0 - _erf_small(x)
    tail = _erfc_positive(y)
    return tail if x > 0.0 else 2.0 - tail


def normal_pdf(x: float) -> float:
    """Standard Gaussian density (2*pi)**-0.5 * exp(-x**2 / 2)."""
    x = _require_finite(x, "x")
    return _INV_SQRT_2PI * math.exp(-0.5 * x * x)


def normal_cdf(x: float) -> float:
    """Standard Gaussian distribution function, accurate to ~1e-15 absolute."""
    x = _require_finite(x, "x")
    return 0.5 * _erfc(-x / _SQRT2)


# Acklam's inverse-normal approximation (relative error < 1.15e-9),
# used only as the starting point for Halley refinement.
_ACK_A = (-3.969683028665376e+01, 2.209460984245205e+02,
          -2.759285104469687e+02, 1.383577518672690e+02,
          -3.066479806614716e+01, 2.506628277459239e+00)
_ACK_B = (-5.447609879822406e+01, 1.615858368580409e+02,
          -1.556989798598866e+02, 6.680131188771972e+01,
          -1.328068155288572e+01)
_ACK_C = (-7.784894002430293e-03, -3.223964580411365e-01,
          -2.400758277161838e+00, -2.549732539343734e+00,
          4.374664141464968e+00, 2.938163982698783e+00)
_ACK_D = (7.784695709041462e-03, 3.224671290700398e-01,
          2.445134137142996e+00, 3.754408661907416e+00)


def _acklam(p: float) -> float:
    if p < 0.02425:
        q = math.sqrt(-2.0 * math.log(p))
        return ((((((_ACK_C[0] * q + _ACK_C[1]) * q + _ACK_C[2]) * q + _ACK_C[3]) * q
                  + _ACK_C[4]) * q + _ACK_C[5])
                / ((((_ACK_D[0] * q + _ACK_D[1]) * q + _ACK_D[2]) * q + _ACK_D[3]) * q + 1.0))
    if p > 0.97575:
        return -_acklam(1.0 - p)
    q = p - 0.5
    r = q * q
    return ((((((_ACK_A[0] * r + _ACK_A[1]) * r + _ACK_A[2]) * r + _ACK_A[3]) * r
              + _ACK_A[4]) * r + _ACK_A[5]) * q
            / (((((_ACK_B[0] * r + _ACK_B[1]) * r + _ACK_B[2]) * r + _ACK_B[3]) * r
                + _ACK_B[4]) * r + 1.0))


def normal_quantile(p: float) -> float:
    """Inverse of normal_cdf on (0, 1); round-trips to ~1e-15."""
    p = float(p)
    if not (0.0 < p < 1.0) or math.isnan(p):
        raise DomainError(f"p must lie strictly inside (0, 1), got {p!r}")
    x = _acklam(p)
    # Two Halley steps; skipped in the extreme tail where the density
    # underflows (Acklam alone is already ~1e-9 relative there).
    for _ in range(2):
        dens = normal_pdf(x)
        if dens < 1e-280:
            break
        err = normal_cdf(x) - p
        u = err / dens
        x -= u / (1.0 + 0.5 * x * u)
    return x


def _log_beta(a: float, b: float) -> float:
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def _beta_cont_frac(a: float, b: float, x: float) -> float:
    # Modified Lentz evaluation of the continued fraction for I_x(a, b).
    eps = 1e-15
    fpmin = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < fpmin:
        d = fpmin
    d = 1.0 / d
    h = d
    for m in range(1, 300):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < fpmin:
            d = fpmin
        c = 1.0 + aa / c
        if abs(c) < fpmin:
            c = fpmin
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < fpmin:
            d = fpmin
        c = 1.0 + aa / c
        if abs(c) < fpmin:
            c = fpmin
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            break
    return h


def _reg_inc_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b) for x in [0, 1]."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    front = math.exp(a * math.log(x) + b * math.log1p(-x) - _log_beta(a, b))
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cont_frac(a, b, x) / a
    return 1.0 - front * _beta_cont_frac(b, a, 1.0 - x) / b


def _check_df(df: int) -> int:
    if not isinstance(df, (int,)) or isinstance(df, bool):
        raise DomainError(f"df must be an integer >= 1, got {df!r}")
    if df < 1:
        raise DomainError(f"df must be >= 1, got {df}")
    return df


def student_t_cdf(x: float, df: int) -> float:
    """Student-t distribution function with ``df`` degrees of freedom."""
    x = _require_finite(x, "x")
    df = _check_df(df)
    if x == 0.0:
        return 0.5
    tail = 0.5 * _reg_inc_beta(0.5 * df, 0.5, df / (df + x * x))
    return 1.0 - tail if x > 0.0 else tail


def _student_t_pdf(x: float, df: int) -> float:
    lognorm = (math.lgamma(0.5 * (df + 1)) - math.lgamma(0.5 * df)
               - 0.5 * math.log(df * math.pi))
    return math.exp(lognorm - 0.5 * (df + 1) * math.log1p(x * x / df))


def student_t_quantile(p: float, df: int) -> float:
    """Inverse of student_t_cdf; safeguarded Newton inside a bisection bracket."""
    p = float(p)
    if not (0.0 < p < 1.0) or math.isnan(p):
        raise DomainError(f"p must lie strictly inside (0, 1), got {p!r}")
    df = _check_df(df)
    if p == 0.5:
        return 0.0
    if p < 0.5:
        return -student_t_quantile(1.0 - p, df)
    # p > 0.5: the root is positive. Grow the bracket, then refine.
    lo, hi = 0.0, 1.0
    while student_t_cdf(hi, df) < p:
        lo = hi
        hi *= 2.0
        if hi > 1e300:
            raise DomainError(f"quantile overflow for p={p!r}, df={df}")
    x = min(max(normal_quantile(p), lo), hi)
    for _ in range(100):
        f = student_t_cdf(x, df) - p
        if f > 0.0:
            hi = x
        else:
            lo = x
        step = f / max(_student_t_pdf(x, df), 1e-300)
        x_new = x - step
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= 1e-14 * max(1.0, abs(x)):
            return x_new
        x = x_new
    return x
