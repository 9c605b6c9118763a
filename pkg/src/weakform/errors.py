"""Exception hierarchy shared by every module."""


class WeakFormError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(WeakFormError, ValueError):
    """Arguments violate a documented precondition."""


class FormatError(InvalidInputError):
    """Malformed CSV input (bad header, dates out of order, bad price cell)."""


class DegenerateSeriesError(WeakFormError, ValueError):
    """The series carries no usable variation for the requested statistic."""


class SingularDesignError(WeakFormError, ArithmeticError):
    """Regression design matrix is rank deficient."""
