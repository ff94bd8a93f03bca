"""Generalized Fermi pseudopotential in non-integer dimension.

Subpackages and modules:

- :mod:`fracfermi.specfun`: Gamma family, hypergeometric and Laguerre functions
- :mod:`fracfermi.fraccalc`: Riemann-Liouville and Caputo derivatives
- :mod:`fracfermi.pseudopot`: phase function, Frobenius series, odd-d bridge
- :mod:`fracfermi.trap`: two atoms in a harmonic trap
- :mod:`fracfermi.cli`: command-line interface
"""

from . import fraccalc, pseudopot, specfun, trap
from .errors import (
    BranchError,
    DomainError,
    EvenDimensionWarning,
    FracFermiError,
    NearPoleWarning,
    NoRootInInterval,
    NonConvergence,
    PoleError,
    PoleSignal,
    TruncationWarning,
)

__version__ = "0.1.0"

__all__ = [
    "fraccalc",
    "pseudopot",
    "specfun",
    "trap",
    "BranchError",
    "DomainError",
    "EvenDimensionWarning",
    "FracFermiError",
    "NearPoleWarning",
    "NoRootInInterval",
    "NonConvergence",
    "PoleError",
    "PoleSignal",
    "TruncationWarning",
]
