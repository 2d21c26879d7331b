"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested quantity."""


class NumericalError(ArithmeticError):
    """A numerical procedure could not reach its accuracy target.

    ``estimate`` carries the achieved error estimate (relative unless the
    raising routine documents otherwise).
    """

    def __init__(self, message, estimate=float("nan")):
        super().__init__(message)
        self.estimate = estimate


class QuadratureError(NumericalError):
    pass


class TruncationError(NumericalError):
    pass
