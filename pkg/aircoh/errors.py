"""Exception types raised by aircoh."""


class AircohError(Exception):
    """Base class for every error raised by the package."""


class DomainError(AircohError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(AircohError, ArithmeticError):
    """
    Adaptive quadrature ran out of subdivisions.

    :param message: Human readable description.
    :param result: The best QuadResult reached before giving up.
    """

    def __init__(self, message, result=None):
        super(ConvergenceError, self).__init__(message)
        self.result = result


class UndefinedValueError(AircohError, ArithmeticError):
    """A normalized quantity is requested where its denominator vanishes."""


class LandmarkError(AircohError, ValueError):
    """Peak or half-maximum crossing cannot be located on the sampled grid."""


class GridEvaluationError(AircohError):
    """
    An evaluator failed on one point of a grid.

    :param index: Flat (row-major) index of the failing grid point.
    :param cause: The original exception.
    """

    def __init__(self, index, cause):
        super(GridEvaluationError, self).__init__(
            "Evaluation failed at grid index {}: {}".format(index, cause))
        self.index = index
        self.cause = cause

    @property
    def is_numerical(self):
        return isinstance(self.cause, (ConvergenceError, UndefinedValueError))
