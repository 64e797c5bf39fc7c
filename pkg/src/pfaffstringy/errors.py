"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An integer parameter is outside the range where a formula is defined."""


class ZeroDenominatorError(ZeroDivisionError):
    """A fraction was built with a zero denominator, or divided by zero."""


class PoleError(ArithmeticError):
    """Evaluation or a limit hit a pole of a rational function."""


class SeriesSpecError(ValueError):
    """A hypergeometric series spec does not terminate cleanly."""
