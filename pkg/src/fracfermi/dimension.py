"""Handling of the spatial dimension near even integers."""

import math
import warnings

from .errors import DomainError, EvenDimensionWarning

EVEN_D_TOL = 1e-9
DEFAULT_EPS_GUARD = 1e-6


def nearest_even(d, min_j=1):
    """Return ``2j`` if ``d`` is within EVEN_D_TOL of it (``j >= min_j``), else None."""
    j = round(d / 2.0)
    if j >= min_j and abs(d - 2.0 * j) < EVEN_D_TOL:
        return 2.0 * j
    return None


def guard_even(d, eps_guard=DEFAULT_EPS_GUARD, min_j=1):
    """Shift ``d`` off an even integer by ``eps_guard``, warning when it does.

    Returns the (possibly shifted) dimension and a flag telling whether the
    shift happened.
    """
    d = float(d)
    if not math.isfinite(d):
        raise DomainError("dimension must be finite")
    even = nearest_even(d, min_j)
    if even is None:
        return d, False
    if eps_guard <= 0:
        raise DomainError("eps_guard must be positive")
    shifted = even + eps_guard
    warnings.warn(
        f"d = {d:g} is even; evaluating at d = {shifted:.12g} instead",
        EvenDimensionWarning,
        stacklevel=3,
    )
    return shifted, True


def is_odd_integer(d, tol=EVEN_D_TOL):
    j = round(d)
    return abs(d - j) < tol and j % 2 == 1
