"""The phase-shift function T(d, k*abar) and the pseudopotential coupling.

T is the ratio of the two 0F1 factors that fix the node of the free s-wave,

    T(d, x) = 0F1(; d/2; -x^2/4) / 0F1(; 2 - d/2; -x^2/4),

evaluated through regularized 0F1 so that even dimensions come out as the
analytic limit (T = 0 for even d > 2, apart from x = 0).
"""

import math
import warnings
from dataclasses import dataclass

from scipy.optimize import brentq

from ..dimension import EVEN_D_TOL
from ..errors import DomainError, NearPoleWarning, PoleSignal
from ..specfun import _hyp0f1_regularized_abs, gamma, rgamma, solid_angle

__all__ = [
    "t_function",
    "t_denominator",
    "t_poles",
    "t_small_k_expansion",
    "check_near_pole",
    "coupling_constant",
    "PseudopotentialSpec",
]

# |denominator| below this fraction of its absolute term sum counts as a zero
POLE_RTOL = 1e-13
NEAR_POLE_RTOL = 1e-3


def _check(d, ka):
    d, ka = float(d), float(ka)
    if not (math.isfinite(d) and math.isfinite(ka)):
        raise DomainError("d and ka must be finite")
    if d <= 0:
        raise DomainError("t_function requires d > 0")
    if ka < 0:
        raise DomainError("t_function requires ka >= 0")
    return d, ka


def t_denominator(d, ka):
    """Regularized denominator 0F1~(2 - d/2; -ka^2/4)."""
    d, ka = _check(d, ka)
    return _hyp0f1_regularized_abs(2.0 - d / 2.0, -0.25 * ka * ka)[0]


def _pole_bracket(d, ka):
    f = lambda x: t_denominator(d, x)  # noqa: E731
    h = 1e-9
    while h <= 1e-3:
        lo, hi = max(ka * (1.0 - h), 0.0), ka * (1.0 + h)
        if f(lo) * f(hi) <= 0.0:
            return lo, hi
        h *= 10.0
    return ka, ka


def t_function(d, ka):
    """Phase-shift function T(d, ka), with T(d, 0) = 1.

    Raises
    ------
    PoleSignal
        When the denominator 0F1 vanishes; ``bracket`` encloses its zero.

    Examples
    --------
    >>> round(t_function(3, 0.5), 10)  # tan(x)/x
    1.0926049797
    >>> t_function(4, 0.5)
    0.0
    """
    d, ka = _check(d, ka)
    if ka == 0.0:
        return 1.0
    prefactor = gamma(d / 2.0) * rgamma(2.0 - d / 2.0)
    if prefactor == 0.0:
        return 0.0
    z = -0.25 * ka * ka
    num = _hyp0f1_regularized_abs(d / 2.0, z)[0]
    den, den_abs = _hyp0f1_regularized_abs(2.0 - d / 2.0, z)
    if abs(den) <= POLE_RTOL * den_abs:
        bracket = _pole_bracket(d, ka)
        raise PoleSignal(
            f"T({d:g}, ka) has a pole near ka = {ka:.15g}",
            bracket=bracket,
            location=0.5 * (bracket[0] + bracket[1]),
        )
    return prefactor * num / den


def t_poles(d, ka_max, step=0.01):
    """Poles of T(d, .) on (0, ka_max], located as sign changes of the denominator.

    Even d > 2 has T identically zero and no poles.
    """
    d, ka_max = _check(d, ka_max)
    if rgamma(2.0 - d / 2.0) == 0.0:
        return []
    f = lambda x: t_denominator(d, x)  # noqa: E731
    poles = []
    lo, f_lo = 0.0, f(0.0)
    n = max(int(math.ceil(ka_max / step)), 1)
    for j in range(1, n + 1):
        hi = min(j * step, ka_max)
        f_hi = f(hi)
        if f_hi == 0.0:
            poles.append(hi)
        elif f_lo * f_hi < 0.0:
            poles.append(brentq(f, lo, hi, xtol=1e-15, rtol=1e-15))
        lo, f_lo = hi, f_hi
    return poles


def check_near_pole(d, ka, rtol=NEAR_POLE_RTOL):
    """Warn with NearPoleWarning if ``ka`` is close to or past the first pole of T.

    Returns the first pole (or None when there is none up to ``2 * ka``).
    """
    poles = t_poles(d, max(2.0 * ka, 0.05))
    if not poles:
        return None
    first = poles[0]
    if abs(ka - first) <= rtol * first:
        warnings.warn(
            f"ka = {ka:g} is within {rtol:g} of the pole of T(d={d:g}) at {first:.10g}",
            NearPoleWarning,
            stacklevel=2,
        )
    elif ka > first:
        warnings.warn(
            f"ka = {ka:g} lies past the first pole of T(d={d:g}) at {first:.10g}",
            NearPoleWarning,
            stacklevel=2,
        )
    return first


def t_small_k_expansion(d, ka):
    """Leading small-ka behaviour 1 - (d - 2)/(d - 4) * ka^2 / d."""
    d, ka = float(d), float(ka)
    if abs(d - 4.0) < EVEN_D_TOL:
        raise DomainError("the small-ka expansion of T is singular at d = 4")
    return 1.0 - (d - 2.0) / (d - 4.0) * ka * ka / d


def _abar_power(abar, p):
    if abar > 0:
        return abar**p
    if abar < 0 and float(p).is_integer():
        return abar**p
    raise DomainError("a negative abar needs an integer d - 2")


def coupling_constant(spec):
    """Prefactor Omega(d) abar^(d-2) T(d, k abar) / Gamma(d - 2) of the pseudopotential.

    Near d = 1 the limit of (d - 2)-weighted form is used, giving -2/abar.
    """
    d, k, abar = spec.d, spec.k, spec.abar
    t = t_function(d, abs(k * abar))
    base = solid_angle(d) * _abar_power(abar, d - 2.0) * t
    if abs(d - 1.0) < EVEN_D_TOL:
        return base * (d - 2.0)
    return base * rgamma(d - 2.0)


@dataclass(frozen=True)
class PseudopotentialSpec:
    """Dimension ``d``, wavenumber ``k`` and node radius ``abar`` of a pseudopotential.

    A negative ``abar`` is accepted only when ``d - 2`` is an integer, which
    is where the dimension-five conversion from a 1D scattering length lands.
    """

    d: float
    k: float
    abar: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.d, self.k, self.abar)):
            raise DomainError("d, k and abar must be finite")
        if self.d <= 0:
            raise DomainError("dimension must be positive")
        if self.k < 0:
            raise DomainError("k must be non-negative")
        if self.abar == 0:
            raise DomainError("abar must be non-zero")
        _abar_power(self.abar, self.d - 2.0)

    @property
    def deriv_order(self):
        return self.d - 2.0

    @property
    def coupling(self):
        return coupling_constant(self)
