"""Frobenius series of the free s-wave with a hard-sphere node at abar.

The solution of (laplacian_d + k^2) psi = 0 with indicial roots 0 and 2 - d is

    psi(r) = sum_n alpha_2n r^2n + r^(2 - d) sum_n beta_2n r^2n,

and the node psi(abar) = 0 fixes alpha_0 in terms of beta_0.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from ..dimension import DEFAULT_EPS_GUARD, guard_even
from ..errors import DomainError, PoleSignal, TruncationWarning
from ..fraccalc import PowerSeriesFn, caputo_series_derivative
from ..specfun import _hyp0f1_regularized_abs, gamma, hyp0f1, solid_angle
from .phase import POLE_RTOL, _abar_power

__all__ = [
    "FrobeniusSeries",
    "frobenius_build",
    "psi_terms",
    "psi_eval",
    "regularized_bracket",
    "beta0_extract",
    "epsilon_sphere_flux",
]

TRUNCATION_RTOL = 1e-12


@dataclass(frozen=True)
class FrobeniusSeries:
    """Truncated coefficient arrays; ``alpha[n]`` multiplies r**(2n)."""

    d: float
    k: float
    abar: float
    alpha: tuple
    beta: tuple
    n_terms: int
    log_coeff: float = 0.0


def _recurrences(d, k, alpha0, beta0, n_terms):
    k2 = k * k
    alpha, beta = [alpha0], [beta0]
    for n in range(n_terms - 1):
        alpha.append(-k2 * alpha[-1] / ((2 * n + 2) * (2 * n + d)))
        beta.append(-k2 * beta[-1] / ((2 * n + 4 - d) * (2 * n + 2)))
    return tuple(alpha), tuple(beta)


def frobenius_build(d, k, abar, n_terms=40, beta0=1.0, eps_guard=DEFAULT_EPS_GUARD):
    """Build the series with node at ``abar`` and normalization ``beta0``.

    Even dimensions (including d = 2) are moved to ``d + eps_guard`` first.

    Raises
    ------
    PoleSignal
        If 0F1(; d/2; -(k abar)^2/4) vanishes, so no finite alpha_0 exists.
    """
    if n_terms < 1:
        raise DomainError("n_terms must be at least 1")
    if k < 0 or abar <= 0:
        raise DomainError("frobenius_build requires k >= 0 and abar > 0")
    d, _ = guard_even(d, eps_guard, min_j=1)
    if d <= 1:
        raise DomainError("frobenius_build requires d > 1")
    z = -0.25 * (k * abar) ** 2
    reg, reg_abs = _hyp0f1_regularized_abs(d / 2.0, z)
    if abs(reg) <= POLE_RTOL * reg_abs:
        raise PoleSignal(f"0F1(d/2) vanishes at k*abar = {k * abar:.15g}", location=k * abar)
    ratio = hyp0f1(2.0 - d / 2.0, z) / hyp0f1(d / 2.0, z)
    alpha0 = -beta0 / abar ** (d - 2.0) * ratio
    alpha, beta = _recurrences(d, k, alpha0, beta0, n_terms)
    return FrobeniusSeries(d=d, k=k, abar=abar, alpha=alpha, beta=beta, n_terms=n_terms)


def psi_terms(series, r):
    """Regular and irregular term arrays whose total is psi(r)."""
    if r <= 0:
        raise DomainError("psi is evaluated at r > 0")
    powers = r ** (2.0 * np.arange(series.n_terms))
    regular = np.asarray(series.alpha) * powers
    irregular = r ** (2.0 - series.d) * np.asarray(series.beta) * powers
    return regular, irregular


def psi_eval(series, r):
    """Evaluate psi(r).

    Warns with TruncationWarning when the last retained term is larger than
    1e-12 of the summed term magnitudes. Magnitudes are used rather than the
    total because the total vanishes at the node.
    """
    regular, irregular = psi_terms(series, r)
    scale = np.sum(np.abs(regular)) + np.sum(np.abs(irregular))
    last = abs(regular[-1]) + abs(irregular[-1])
    if series.n_terms > 1 and last > TRUNCATION_RTOL * scale:
        warnings.warn(
            f"series truncated at {series.n_terms} terms is not converged at r = {r:g}",
            TruncationWarning,
            stacklevel=2,
        )
    return float(np.sum(regular) + np.sum(irregular))


def regularized_bracket(series):
    """Limit r -> 0 of the order d-2 Caputo derivative of r^(d-2) psi, termwise.

    The alpha terms carry powers 2n + d - 2 and the beta terms integer powers
    2n, which the Caputo derivative removes below the order; what survives
    is Gamma(d - 1) alpha_0.
    """
    d = series.d
    terms = [(2 * n + d - 2.0, a) for n, a in enumerate(series.alpha)]
    terms += [(2.0 * n, b) for n, b in enumerate(series.beta)]
    return caputo_series_derivative(d - 2.0, PowerSeriesFn(terms), 0.0)


def beta0_extract(series):
    """Recover beta_0 from the regularized bracket and the 0F1 ratio."""
    d, ka = series.d, series.k * series.abar
    z = -0.25 * ka * ka
    den = hyp0f1(2.0 - d / 2.0, z)
    if den == 0.0:
        raise PoleSignal("0F1(2 - d/2) vanishes", location=ka)
    ratio = hyp0f1(d / 2.0, z) / den
    return -_abar_power(series.abar, d - 2.0) / gamma(d - 1.0) * ratio * regularized_bracket(series)


def epsilon_sphere_flux(series, eps):
    """Outward flux Omega(d) sum beta_2n (2n - d + 2) eps^2n through a sphere of radius eps."""
    if not 0.0 < eps < series.abar:
        raise DomainError("eps must lie in (0, abar)")
    d = series.d
    total = math.fsum(
        b * (2 * n - d + 2.0) * eps ** (2 * n) for n, b in enumerate(series.beta)
    )
    return solid_angle(d) * total
