"""Generalized pseudopotential: phase function, Frobenius series and the odd-d bridge."""

from .frobenius import (
    FrobeniusSeries,
    beta0_extract,
    epsilon_sphere_flux,
    frobenius_build,
    psi_eval,
    psi_terms,
    regularized_bracket,
)
from .phase import (
    PseudopotentialSpec,
    check_near_pole,
    coupling_constant,
    t_denominator,
    t_function,
    t_poles,
    t_small_k_expansion,
)
from .bridge import (
    UnitSystem,
    WodGamma,
    a1_from_abar,
    abar_from_a1,
    double_factorial,
    wod_ad,
    wod_coupling,
    wod_gamma,
)

__all__ = [
    "FrobeniusSeries",
    "PseudopotentialSpec",
    "UnitSystem",
    "WodGamma",
    "a1_from_abar",
    "abar_from_a1",
    "beta0_extract",
    "check_near_pole",
    "coupling_constant",
    "double_factorial",
    "epsilon_sphere_flux",
    "frobenius_build",
    "psi_eval",
    "psi_terms",
    "regularized_bracket",
    "t_denominator",
    "t_function",
    "t_poles",
    "t_small_k_expansion",
    "wod_ad",
    "wod_coupling",
    "wod_gamma",
]
