"""Exception types shared by the numerical modules."""


class NumericalError(ArithmeticError):
    """Base class for failures raised by this package."""


class PoleError(NumericalError, ValueError):
    """A gamma-type function was asked for its value at a pole."""


class DomainError(NumericalError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class NonConvergenceError(NumericalError):
    """An iterative method ran out of its term, node or step budget."""


class PrecisionLossError(NumericalError):
    """Cancellation inside a series left too few correct digits in the result."""


class RangeError(NumericalError, OverflowError):
    """A finite result lies outside the double-precision range."""


class FitError(NumericalError):
    """A least-squares fit did not reproduce the data to the required level."""


class ResonanceError(NumericalError, ValueError):
    """The two boundary exponents of an ODE coincide modulo the series step."""


class ConfigError(ValueError):
    """A verification configuration is malformed."""
