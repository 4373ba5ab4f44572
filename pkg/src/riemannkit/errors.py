"""Exception hierarchy shared by all riemannkit modules."""


class RiemannKitError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RiemannKitError):
    """Input violates a documented precondition (bad parameters, wrong ranges)."""


class NumericFailure(RiemannKitError):
    """A numerical procedure did not reach the requested tolerance.

    The best value obtained so far, when one exists, is attached as ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class InternalConsistencyError(RiemannKitError):
    """An internal invariant failed (e.g. a degree sum that must be zero is not)."""


class CommonComponentError(DomainError):
    """The two curves share a component; local intersection numbers are undefined."""


class NotSquarefreeError(DomainError):
    """A polynomial required to be squarefree has a repeated root."""


class OnContourPoleError(DomainError):
    """A pole of the integrand lies on (or too close to) the integration contour."""


class CompatibilityError(DomainError):
    """Right-hand side violates the mean-zero compatibility condition."""


class UnsupportedConfigurationError(DomainError):
    """Exact machinery cannot resolve this input (e.g. irrational intersection points)."""
