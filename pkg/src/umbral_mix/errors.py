"""Exception types raised by the library."""


class UmbralError(ValueError):
    """Base class for every error raised on bad input."""


class CapExhaustedError(UmbralError):
    """A computation needs coefficients beyond a series' truncation cap."""


class DivisionOrderError(UmbralError):
    """The dividend has lower order than the divisor, so no power series quotient exists."""


class ZeroDivisorError(UmbralError, ZeroDivisionError):
    """The divisor vanishes up to its cap."""


class NotDeltaError(UmbralError):
    """Composition needs an inner series with zero constant term."""


class InvalidParamsError(UmbralError):
    pass


class DomainError(UmbralError):
    pass
