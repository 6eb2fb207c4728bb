"""Exception types shared across the package."""


class HermorthoError(Exception):
    """Base class for all package errors."""


class OrderOutOfRange(HermorthoError, ValueError):
    """A polynomial or Bessel order lies outside its validity bounds."""


class NonFiniteInput(HermorthoError, ValueError):
    """NaN or infinite argument (or integrand value) where a finite one is required."""


class ConvergenceError(HermorthoError, ArithmeticError):
    """An iterative method (eigen-solver, Newton, quadrature doubling) failed to converge.

    ``value`` and ``estimate`` carry the last iterate when one exists.
    """

    def __init__(self, message, value=None, estimate=None):
        super().__init__(message)
        self.value = value
        self.estimate = estimate
