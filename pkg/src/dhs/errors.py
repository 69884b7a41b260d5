"""Exception types raised across the package."""


class DHSError(Exception):
    """Base class for all errors raised by dhs."""


class PoleError(DHSError, ValueError):
    """A Gamma-function argument sits on (or within tolerance of) a pole."""


class ConvergenceError(DHSError, ArithmeticError):
    """A series did not reach its tolerance within the term cap."""


class DegenerateParameterError(DHSError, ValueError):
    """c - a - b is (numerically) an integer, so the connection formula fails."""


class DomainError(DHSError, ValueError):
    """Argument outside the domain of a model function (e.g. r <= 0)."""


class EvanescentChannelError(DHSError, ValueError):
    """The asymptotic wave number is imaginary: no scattering state exists.

    ``k_squared`` carries the negative radicand so callers can report it.
    """

    def __init__(self, message, k_squared=None):
        super().__init__(message)
        self.k_squared = k_squared


class ComplexExponentError(DHSError, ValueError):
    """The small-r exponent lambda has a negative radicand (fall to centre)."""

    def __init__(self, message, radicand=None):
        super().__init__(message)
        self.radicand = radicand


class EmptyWindowError(DHSError, ValueError):
    """No point of the energy window has real, valid parameters."""


class NoTransitionError(DHSError, ValueError):
    """The shooting function does not change sign inside the bracket."""


class FitQualityError(DHSError, ArithmeticError):
    """Asymptotic sine fit residual exceeds the accepted threshold."""
