"""Real-argument special functions.

Gamma family, the hypergeometric functions 0F1, 1F1 (Kummer M) and 2F1,
Kummer's U, associated Laguerre polynomials and the d-sphere solid angle.
Arguments are assumed to be of desk scale (|z| up to about 50).
"""

import math

import numpy as np

from .errors import DomainError, NonConvergence, PoleError

__all__ = [
    "gamma",
    "rgamma",
    "digamma",
    "hyp0f1",
    "hyp0f1_regularized",
    "hyp1f1_regularized",
    "hyp2f1",
    "kummerU",
    "laguerre",
    "laguerre_sequence",
    "solid_angle",
    "is_nonpositive_integer",
]

MAX_TERMS = 200
SERIES_RTOL = 1e-14


def _finite(name, x):
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def is_nonpositive_integer(x):
    return x <= 0 and float(x).is_integer()


def gamma(x):
    """Euler Gamma function.

    Raises
    ------
    PoleError
        If `x` is zero or a negative integer.
    """
    x = _finite("x", x)
    if is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x:g}")
    return math.gamma(x)


def rgamma(x):
    """Reciprocal Gamma function 1/Gamma(x), an entire function (zero at poles)."""
    x = _finite("x", x)
    if is_nonpositive_integer(x):
        return 0.0
    if x > 171.0:
        return math.exp(-math.lgamma(x))
    if x < -170.0:
        # reflection: 1/Gamma(x) = Gamma(1 - x) sin(pi x) / pi
        try:
            return math.exp(math.lgamma(1.0 - x)) * math.sin(math.pi * x) / math.pi
        except OverflowError:
            raise DomainError(f"1/Gamma({x:g}) overflows") from None
    return 1.0 / math.gamma(x)


# Bernoulli numbers B_2k / (2k) for the asymptotic digamma series
_DIGAMMA_ASYMP = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def digamma(x):
    """Logarithmic derivative of the Gamma function."""
    x = _finite("x", x)
    if is_nonpositive_integer(x):
        raise PoleError(f"digamma has a pole at {x:g}")
    if x < 0.5:
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    p = inv2
    for c in _DIGAMMA_ASYMP:
        series += c * p
        p *= inv2
    return acc + math.log(x) - 0.5 / x - series


def _first_live_index(b):
    # first n with b + n off the Gamma poles; 1/Gamma(b + n) vanishes below it
    if is_nonpositive_integer(b):
        return int(-b) + 1
    return 0


def _regularized_series(a, b, z, rtol, max_terms, with_abs=False):
    """Sum of (a)_n z^n / (Gamma(b + n) n!); ``a=None`` drops the Pochhammer."""
    n = _first_live_index(b)
    if n > 0 and z == 0.0:
        return (0.0, 0.0) if with_abs else 0.0
    term = rgamma(b + n) * z**n / math.factorial(n)
    if a is not None:
        term *= _poch(a, n)
    total = term
    abs_total = abs(term)
    if z == 0.0:
        return (total, abs_total) if with_abs else total
    while n < max_terms:
        ratio = z / ((n + 1) * (b + n))
        if a is not None:
            ratio *= a + n
        term *= ratio
        n += 1
        total += term
        abs_total += abs(term)
        if abs(term) <= rtol * abs(total) and abs(ratio) < 1.0:
            return (total, abs_total) if with_abs else total
        if term == 0.0 and abs(ratio) < 1.0:
            return (total, abs_total) if with_abs else total
    raise NonConvergence(
        f"hypergeometric series (a={a}, b={b}, z={z}) unconverged after {max_terms} terms"
    )


def _poch(a, n):
    out = 1.0
    for j in range(n):
        out *= a + j
    return out


def hyp0f1_regularized(b, z, rtol=SERIES_RTOL, max_terms=MAX_TERMS):
    """Regularized confluent limit function 0F1(;b;z) / Gamma(b).

    Entire in `b`; at non-positive integer `b` the finite limit is returned.
    """
    b = _finite("b", b)
    z = _finite("z", z)
    return _regularized_series(None, b, z, rtol, max_terms)


def _hyp0f1_regularized_abs(b, z, rtol=SERIES_RTOL, max_terms=MAX_TERMS):
    return _regularized_series(None, b, z, rtol, max_terms, with_abs=True)


def hyp0f1(b, z, rtol=SERIES_RTOL, max_terms=MAX_TERMS):
    """Confluent limit function 0F1(;b;z) = sum z^n / ((b)_n n!).

    Examples
    --------
    >>> round(hyp0f1(1.5, -0.25), 10)  # sin(1)/1
    0.8414709848
    """
    b = _finite("b", b)
    if is_nonpositive_integer(b):
        raise PoleError(f"0F1 undefined for b = {b:g}")
    return gamma(b) * hyp0f1_regularized(b, z, rtol, max_terms)


def hyp1f1_regularized(a, b, z, rtol=1e-15, max_terms=500):
    """Regularized Kummer function M(a, b, z) / Gamma(b)."""
    a = _finite("a", a)
    b = _finite("b", b)
    z = _finite("z", z)
    return _regularized_series(a, b, z, rtol, max_terms)


def kummerU(a, b, z):
    """Tricomi confluent hypergeometric function U(a, b, z) for z > 0.

    Built from the Kummer-M connection formula in regularized form,

        U = pi / sin(pi b) * [M~(a, b, z) / Gamma(a - b + 1)
                              - z**(1 - b) M~(a - b + 1, 2 - b, z) / Gamma(a)],

    which stays finite when `a` or `a - b + 1` sits on a Gamma pole. Integer
    `b` (the logarithmic case) is not supported.
    """
    a = _finite("a", a)
    b = _finite("b", b)
    z = _finite("z", z)
    if z <= 0.0:
        raise DomainError("kummerU requires z > 0")
    if float(b).is_integer():
        raise PoleError("kummerU connection formula is singular for integer b")
    first = hyp1f1_regularized(a, b, z) * rgamma(a - b + 1.0)
    second = z ** (1.0 - b) * hyp1f1_regularized(a - b + 1.0, 2.0 - b, z) * rgamma(a)
    return math.pi / math.sin(math.pi * b) * (first - second)


def hyp2f1(a, b, c, z, rtol=1e-13, max_terms=20000):
    """Gaussian hypergeometric series 2F1(a, b; c; z) for |z| < 1."""
    a, b, c, z = (_finite(name, v) for name, v in zip("abcz", (a, b, c, z)))
    if abs(z) >= 1.0:
        raise DomainError("hyp2f1 series requires |z| < 1")
    if is_nonpositive_integer(c):
        raise PoleError(f"2F1 undefined for c = {c:g}")
    term = 1.0
    total = 1.0
    for n in range(max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) <= rtol * abs(total):
            return total
    raise NonConvergence(f"2F1({a}, {b}; {c}; {z}) unconverged after {max_terms} terms")


def laguerre(n, alpha, x):
    """Associated Laguerre polynomial L_n^(alpha)(x) by three-term recurrence."""
    if n < 0 or int(n) != n:
        raise DomainError("Laguerre degree must be a non-negative integer")
    n = int(n)
    prev, cur = 1.0, 1.0 + alpha - x
    if n == 0:
        return prev
    for j in range(1, n):
        prev, cur = cur, ((2 * j + 1 + alpha - x) * cur - (j + alpha) * prev) / (j + 1)
    return cur


def laguerre_sequence(n_max, alpha, x):
    """Array of L_0^(alpha)(x), ..., L_{n_max}^(alpha)(x)."""
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 1.0 + alpha - x
    for j in range(1, n_max):
        out[j + 1] = ((2 * j + 1 + alpha - x) * out[j] - (j + alpha) * out[j - 1]) / (j + 1)
    return out


def solid_angle(d):
    """Total solid angle of the unit sphere in d dimensions, 2 pi^(d/2) / Gamma(d/2)."""
    d = _finite("d", d)
    if d <= 0:
        raise DomainError("solid_angle requires d > 0")
    return 2.0 * math.pi ** (d / 2.0) / math.gamma(d / 2.0)
