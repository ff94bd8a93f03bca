r"""Fractional derivatives of powers and of Gaussian-power products.

The Riemann-Liouville (lower limit 0) derivative of a power is

.. math::

    D^\alpha x^\beta = \frac{\Gamma(\beta + 1)}{\Gamma(\beta - \alpha + 1)} x^{\beta - \alpha},

and the Caputo derivative agrees with it except that it annihilates
non-negative integer powers below the order. Orders :math:`\alpha \le 0`
are accepted and act as fractional integrals through the same power rule,
which is what the pseudopotential needs for dimensions between 1 and 2.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergence
from .specfun import gamma, hyp2f1, is_nonpositive_integer, rgamma

__all__ = [
    "FracOrder",
    "PowerSeriesFn",
    "rl_power_derivative",
    "caputo_power_derivative",
    "general_power_derivative",
    "caputo_series_derivative",
    "gaussian_power_leibniz",
    "gaussian_power_boundary_limit",
    "gaussian_power_boundary_leibniz",
    "gaussian_boundary_zero_check",
]

_ZERO_POWER_TOL = 1e-12


@dataclass(frozen=True)
class FracOrder:
    """Derivative order ``alpha`` and its ceiling ``m`` (``m - 1 < alpha <= m``)."""

    alpha: float

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise DomainError("derivative order must be finite")

    @property
    def m(self):
        return max(math.ceil(self.alpha), 0)


def _alpha(order):
    return order.alpha if isinstance(order, FracOrder) else float(order)


@dataclass(frozen=True)
class PowerSeriesFn:
    """Finite generalized power series ``sum(c * x**p for p, c in terms)``."""

    terms: tuple

    def __init__(self, terms):
        pairs = tuple(sorted((float(p), float(c)) for p, c in terms))
        for p, _ in pairs:
            if not math.isfinite(p):
                raise DomainError("powers must be finite")
        object.__setattr__(self, "terms", pairs)

    def __call__(self, x):
        return sum(c * _power(x, p) for p, c in self.terms)


def _power(x, p):
    if x == 0.0:
        if abs(p) < _ZERO_POWER_TOL:
            return 1.0
        if p > 0:
            return 0.0
        raise DomainError(f"x**{p:g} is singular at the origin")
    if x < 0 and not float(p).is_integer():
        raise DomainError(f"negative base with non-integer power {p:g}")
    return x**p


def rl_power_derivative(alpha, beta, x):
    """Riemann-Liouville derivative of ``x**beta`` with lower limit 0.

    Terms whose denominator Gamma(beta - alpha + 1) sits on a pole are zero.
    """
    a = _alpha(alpha)
    if x < 0 and not float(beta - a).is_integer():
        raise DomainError("x < 0 requires an integer beta - alpha")
    denom = beta - a + 1.0
    if is_nonpositive_integer(denom):
        return 0.0
    return gamma(beta + 1.0) * rgamma(denom) * _power(x, beta - a)


def caputo_power_derivative(alpha, beta, x):
    """Caputo derivative of ``x**beta``; zero for integer ``0 <= beta < alpha``."""
    a = _alpha(alpha)
    if beta >= 0 and float(beta).is_integer() and a > beta:
        return 0.0
    return rl_power_derivative(a, beta, x)


def general_power_derivative(alpha, beta, x, x0):
    """Fractional derivative of ``x**beta`` with an arbitrary lower limit ``x0``.

    Adds to the Riemann-Liouville value the lower-limit correction

        -x0**(beta + 1) / ((beta + 1) Gamma(-alpha)) * x**(-alpha - 1)
            * 2F1(1 + alpha, 1 + beta; 2 + beta; x0 / x),

    which vanishes for integer ``alpha``.
    """
    alpha = float(alpha)
    if not 0.0 <= x0 < x:
        raise DomainError("general_power_derivative requires 0 <= x0 < x")
    if beta <= -1.0:
        raise DomainError("general_power_derivative requires beta > -1")
    first = rl_power_derivative(alpha, beta, x)
    weight = rgamma(-alpha)
    if x0 == 0.0 or weight == 0.0:
        return first
    tail = hyp2f1(1.0 + alpha, 1.0 + beta, 2.0 + beta, x0 / x)
    return first - x0 ** (beta + 1.0) / (beta + 1.0) * weight * x ** (-alpha - 1.0) * tail


def caputo_series_derivative(alpha, f, x):
    """Termwise Caputo derivative of a :class:`PowerSeriesFn` at ``x``.

    At ``x = 0`` the value is the r -> 0 limit: surviving constant terms are
    kept, positive powers drop out, and a negative power raises DomainError.
    Powers in (-1, 0) are allowed; the power rule still holds there.
    """
    a = _alpha(alpha)
    total = 0.0
    for p, c in f.terms:
        if p <= -1:
            raise DomainError("caputo_series_derivative needs powers above -1")
        if c == 0.0:
            continue
        total += c * caputo_power_derivative(a, p, x)
    return total


def _gaussian_derivatives(r, kmax):
    # k-th derivative of exp(-r^2/2) is (-1)^k He_k(r) exp(-r^2/2)
    g = math.exp(-0.5 * r * r)
    he_prev, he = 0.0, 1.0
    out = []
    for k in range(kmax + 1):
        out.append((-1) ** k * he * g)
        he_prev, he = he, r * he - k * he_prev
    return out


def _binomials(eta, kmax):
    out = [1.0]
    for k in range(kmax):
        out.append(out[-1] * (eta - k) / (k + 1))
    return out


def _gauss_power_derivative(eta, k, r):
    """k-th ordinary derivative of r**eta exp(-r^2/2), by the integer Leibniz rule."""
    g = _gaussian_derivatives(r, k)
    total = 0.0
    falling = 1.0
    for j in range(k + 1):
        total += math.comb(k, j) * falling * _power(r, eta - j) * g[k - j]
        falling *= eta - j
    return total


def _leibniz_sum(terms, rtol, name):
    total = 0.0
    for k, term in enumerate(terms):
        total += term
        if k > 0 and abs(term) < rtol * abs(total):
            return total
    raise NonConvergence(f"{name}: Leibniz series did not reach {rtol:g}")


def gaussian_power_leibniz(eta, r, kmax=60, rtol=1e-16):
    """Caputo derivative of order ``eta`` of ``exp(-r^2/2) r**eta`` at ``r > 0``.

    Evaluated with the generalized Leibniz rule, taking ``f = r**eta`` and
    ``g = exp(-r^2/2)``; the finite Taylor correction sum is included and
    is identically zero for this product.
    """
    if r <= 0:
        raise DomainError("r must be positive")
    binoms = _binomials(eta, kmax)
    gders = _gaussian_derivatives(r, kmax)
    coef = gamma(eta + 1.0)
    terms = (binoms[k] * coef / math.factorial(k) * r**k * gders[k] for k in range(kmax + 1))
    main = _leibniz_sum(terms, rtol, "gaussian_power_leibniz")
    m = FracOrder(eta).m
    correction = sum(
        _power(r, k - eta) * rgamma(k + 1.0 - eta) * _gauss_power_derivative(eta, k, 0.0)
        for k in range(m)
    )
    return main - correction


def gaussian_power_boundary_limit(d):
    """Limit r -> 0 of the order d-2 Caputo derivative of exp(-r^2/2) r**(d-2).

    Returns the closed form Gamma(d - 1). The independent Leibniz-series
    route is :func:`gaussian_power_boundary_leibniz`.
    """
    if d <= 1:
        raise DomainError("gaussian_power_boundary_limit requires d > 1")
    return gamma(d - 1.0)


def gaussian_power_boundary_leibniz(d, r0=0.02, levels=4):
    """Richardson-extrapolated r -> 0 limit of :func:`gaussian_power_leibniz`.

    The Leibniz value is even in ``r``, so the tableau eliminates powers of
    ``r**2`` on the sequence ``r0, r0/2, r0/4, ...``.
    """
    if d <= 1:
        raise DomainError("gaussian_power_boundary_leibniz requires d > 1")
    eta = d - 2.0
    rows = [gaussian_power_leibniz(eta, r0 / 2**j) for j in range(levels)]
    for order in range(1, levels):
        factor = 4.0**order
        rows = [(factor * rows[j + 1] - rows[j]) / (factor - 1.0) for j in range(len(rows) - 1)]
    return rows[0]


def gaussian_boundary_zero_check(d, r_small, kmax=60, rtol=1e-16):
    """Order d-2 Caputo derivative of exp(-r^2/2) at a small radius.

    Uses the Leibniz rule with ``f = 1`` and ``g = exp(-r^2/2)``; the result
    tends to zero as ``r_small -> 0``.
    """
    if not 0.0 < r_small <= 0.1:
        raise DomainError("r_small must lie in (0, 0.1]")
    eta = d - 2.0
    binoms = _binomials(eta, kmax)
    gders = _gaussian_derivatives(r_small, kmax)
    terms = (
        binoms[k] * r_small ** (k - eta) * rgamma(k - eta + 1.0) * gders[k]
        for k in range(kmax + 1)
    )
    main = _leibniz_sum(terms, rtol, "gaussian_boundary_zero_check")
    g0 = _gaussian_derivatives(0.0, max(FracOrder(eta).m, 1))
    correction = sum(
        r_small ** (k - eta) * rgamma(k + 1.0 - eta) * g0[k] for k in range(FracOrder(eta).m)
    )
    return main - correction
