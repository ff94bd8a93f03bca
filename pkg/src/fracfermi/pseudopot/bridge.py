"""Bridge to the Green's-function pseudopotential of odd integer dimension.

That construction parametrizes the interaction by a 1D area of potential
``a1``; the functions here convert it to the node radius ``abar`` and
reproduce its regularizing coefficient and coupling strength.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ..dimension import is_odd_integer
from ..errors import BranchError, DomainError
from ..specfun import gamma

__all__ = [
    "UnitSystem",
    "WodGamma",
    "wod_gamma",
    "double_factorial",
    "wod_ad",
    "wod_coupling",
    "abar_from_a1",
    "a1_from_abar",
]


@dataclass(frozen=True)
class UnitSystem:
    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0 and self.mass > 0):
            raise DomainError("hbar and mass must be positive")


class WodGamma(NamedTuple):
    bruteforce: float
    closed: float


def _wod_sum(n):
    # exact integer arithmetic; every term is an integer since n - l >= 1
    total = Fraction(0)
    for l in range(n):
        total += Fraction(
            (-1) ** (l + n) * 2 ** (n - l) * math.factorial(n - 1 + l) * math.factorial(2 * n - 1),
            math.factorial(l) * math.factorial(n - 1 - l) * math.factorial(n + l),
        )
    return total


def wod_gamma(n):
    """Regularizing coefficient gamma_{2n+1}: the explicit sum and 1/Gamma(2n).

    >>> wod_gamma(2)
    WodGamma(bruteforce=0.16666666666666666, closed=0.16666666666666666)
    """
    if int(n) != n or not 1 <= n <= 12:
        raise DomainError("wod_gamma needs an integer 1 <= n <= 12")
    n = int(n)
    brute = gamma(0.5 - n) / math.sqrt(math.pi) / float(_wod_sum(n))
    return WodGamma(brute, 1.0 / math.gamma(2 * n))


def double_factorial(k):
    """k!! for odd k >= -1, with (-1)!! = 1."""
    if k < -1 or k % 2 == 0:
        raise DomainError("double_factorial is defined here for odd k >= -1")
    out = 1
    for j in range(k, 0, -2):
        out *= j
    return out


def _odd_dimension(d):
    if not is_odd_integer(d) or d < 1:
        raise DomainError(f"d = {d:g} is not an odd positive integer")
    return int(round(d))


def wod_ad(d, a1, units=UnitSystem()):
    """Area of potential a_d for odd ``d`` in terms of ``a1``.

    Equals ``a1`` at d = 1.
    """
    d = _odd_dimension(d)
    if a1 == 0:
        raise DomainError("a1 must be non-zero")
    hbar, m = units.hbar, units.mass
    return (
        (-2.0 * math.pi) ** ((d - 1) // 2)
        * double_factorial(d - 2)
        * hbar ** (2 * d - 2)
        / (a1 ** (d - 2) * m ** (d - 1))
    )


def wod_coupling(d, a1, units=UnitSystem()):
    """Full prefactor of the odd-d pseudopotential, -a_d / Gamma(d - 1) (or -a1 at d = 1)."""
    d_int = _odd_dimension(d)
    a_d = wod_ad(d_int, a1, units)
    if d_int == 1:
        return -a_d
    return -a_d / math.gamma(d_int - 1)


def _abar_power_from_a1(d, a1, units):
    hbar, m = units.hbar, units.mass
    phase = (-1) ** ((d - 3) // 2)  # i^(d-3) for odd d
    return (
        (2.0 * hbar**2 / (m * a1)) ** (d - 2)
        * phase
        * hbar**2
        * math.gamma(d / 2.0) ** 2
        / (math.pi * m * (d - 2))
    )


def _real_root(x, p):
    # real p-th root for odd integer p, allowing negative x
    if p == 1:
        return x
    return math.copysign(abs(x) ** (1.0 / p), x)


def abar_from_a1(d, a1, units=UnitSystem()):
    """Node radius abar_d equivalent to the 1D area of potential ``a1``.

    Only odd integer dimensions have a real branch; for them the odd root of
    the defining power is taken with its sign, e.g. abar_5 < 0 when a1 > 0.

    Raises
    ------
    BranchError
        If ``d`` is not an odd integer.
    """
    if a1 == 0:
        raise DomainError("a1 must be non-zero")
    if not is_odd_integer(d) or d < 1:
        raise BranchError(f"no real abar branch at d = {d:g}")
    d = int(round(d))
    x = _abar_power_from_a1(d, a1, units)
    if d == 1:
        return 1.0 / x
    return _real_root(x, d - 2)


def a1_from_abar(d, abar, units=UnitSystem()):
    """Inverse of :func:`abar_from_a1`."""
    if abar == 0:
        raise DomainError("abar must be non-zero")
    if not is_odd_integer(d) or d < 1:
        raise BranchError(f"no real a1 branch at d = {d:g}")
    d = int(round(d))
    # abar^(d-2) is proportional to a1^(-(d-2)); solve with the value at a1 = 1
    unit = _abar_power_from_a1(d, 1.0, units)
    return _real_root(unit / abar ** (d - 2), d - 2)
