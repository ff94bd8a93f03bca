"""Self-checks of the library against closed forms, used by ``fracfermi verify``."""

import math
from typing import NamedTuple

import numpy as np

from .fraccalc import gaussian_power_boundary_leibniz
from .pseudopot import (
    PseudopotentialSpec,
    abar_from_a1,
    coupling_constant,
    epsilon_sphere_flux,
    frobenius_build,
    psi_terms,
    t_function,
    wod_coupling,
    wod_gamma,
)
from .specfun import gamma, solid_angle
from .trap import greens_sum_check


class IdentityResult(NamedTuple):
    name: str
    error: float
    tol: float

    @property
    def passed(self):
        return bool(self.error <= self.tol)


def _rel(a, b):
    return abs(a - b) / abs(b)


def check_wod_gamma():
    return max(_rel(*wod_gamma(n)) for n in range(1, 9)), 1e-12


def check_t3():
    xs = np.arange(1, 29) * 0.05
    return max(_rel(t_function(3, x), math.tan(x) / x) for x in xs), 1e-10


def t5_closed(x):
    """T(5, x) in elementary functions."""
    t = math.tan(x)
    return 3.0 * (t - x) / (x**3 * (1.0 + x * t))


def check_t5():
    xs = np.arange(1, 81) * 0.01
    return max(_rel(t_function(5, x), t5_closed(x)) for x in xs), 1e-9


def check_boundary():
    ds = (2.3, 2.9, 3.5, 4.7)
    return max(abs(gaussian_power_boundary_leibniz(d) - gamma(d - 1.0)) for d in ds), 1e-6


def check_greens_sum():
    s = greens_sum_check(3.0, -0.3, 1.0, 2000)
    return abs(s.partial_sum - s.closed), 1e-3


def flux_order(d=3.3, k=1.0, abar=1.0, eps=(1e-2, 1e-3)):
    series = frobenius_build(d, k, abar)
    limit = solid_angle(d) * series.beta[0] * (2.0 - d)
    errs = [abs(epsilon_sphere_flux(series, e) - limit) for e in eps]
    return math.log(errs[0] / errs[1]) / math.log(eps[0] / eps[1])


def check_flux():
    return abs(flux_order() - 2.0), 0.05


def check_table_round_trip():
    errs = []
    for d in (1, 3, 5):
        abar = abar_from_a1(d, 1.3)
        errs.append(_rel(coupling_constant(PseudopotentialSpec(d, 0.0, abar)), wod_coupling(d, 1.3)))
    return max(errs), 1e-12


def check_node():
    worst = 0.0
    for d, k, abar in ((1.5, 0.7, 0.9), (2.5, 0.3, 1.2), (3.3, 1.0, 0.6), (4.6, 0.5, 1.5)):
        reg, irr = psi_terms(frobenius_build(d, k, abar), abar)
        scale = max(np.max(np.abs(reg)), np.max(np.abs(irr)))
        worst = max(worst, abs(np.sum(reg) + np.sum(irr)) / scale)
    return worst, 1e-10


CHECKS = {
    "wod_gamma": check_wod_gamma,
    "t3_closed_form": check_t3,
    "t5_closed_form": check_t5,
    "boundary_gamma": check_boundary,
    "laguerre_u_sum": check_greens_sum,
    "flux_limit_order": check_flux,
    "table_round_trip": check_table_round_trip,
    "frobenius_node": check_node,
}


def run_identities(tol_scale=1.0):
    """Evaluate every check; ``tol_scale`` multiplies each tolerance."""
    out = []
    for name, check in CHECKS.items():
        error, tol = check()
        out.append(IdentityResult(name, float(error), tol * tol_scale))
    return out
