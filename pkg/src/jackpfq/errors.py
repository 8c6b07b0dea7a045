"""Exception hierarchy shared by every module."""


class JackError(Exception):
    """Base class for all errors raised by :mod:`jackpfq`."""


class InvalidInput(JackError, ValueError):
    """An argument violates an operation's precondition."""


class DegenerateParameter(JackError, ArithmeticError):
    """A parameter value makes a generically nonzero quantity vanish.

    Raised when a hook factor, an eigenvalue gap, a ``w_i`` difference or a
    Pochhammer factor is zero at the instantiated parameters.  Callers that
    draw random parameters catch this and redraw.
    """


class PoleError(DegenerateParameter):
    """A lower Pochhammer symbol ``(b_k)_lambda`` vanishes."""

    def __init__(self, message, partition=None, parameter=None):
        super().__init__(message)
        self.partition = partition
        self.parameter = parameter


class NonInvertible(JackError, ZeroDivisionError):
    """A truncated power series with zero constant term was inverted."""


class VerificationFailure(JackError, AssertionError):
    """An identity that the theory guarantees failed to hold exactly."""
