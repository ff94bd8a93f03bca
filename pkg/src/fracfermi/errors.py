"""Exception and warning types shared across the package."""


class FracFermiError(Exception):
    """Base class for all errors raised by fracfermi."""


class DomainError(FracFermiError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class PoleError(FracFermiError, ArithmeticError):
    """Evaluation hit a pole of a Gamma-type function."""


class PoleSignal(PoleError):
    """A physical pole was hit; ``bracket`` encloses the zero that causes it.

    Root finders treat this as a resonance marker rather than a failure.
    """

    def __init__(self, message, bracket=None, location=None):
        super().__init__(message)
        self.bracket = bracket
        self.location = location


class BranchError(DomainError):
    """No real branch of a multivalued expression exists for the input."""


class NonConvergence(FracFermiError, RuntimeError):
    """A series or iteration did not reach its tolerance."""


class TruncationWarning(UserWarning):
    """A truncated series was evaluated where its tail is not negligible."""


class EvenDimensionWarning(UserWarning):
    """An even dimension was replaced by a nearby non-integer value."""


class NoRootInInterval(UserWarning):
    """A bracketing interval of the energy equation held no sign change."""


class NearPoleWarning(UserWarning):
    """An argument sits close to, or past, a pole of T(d, k*abar)."""
