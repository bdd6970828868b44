"""Exception types raised across the package."""


class UawError(Exception):
    """Base class for package errors."""


class DivisionByZero(UawError, ZeroDivisionError):
    pass


class ForbiddenSpecialization(UawError, ValueError):
    """q was bound to 0 or to a value with q**4 == 1."""


class ZeroBinding(UawError, ValueError):
    """One of a, b, c was bound to zero."""


class PoleAtSpecialization(UawError, ValueError):
    """A coefficient denominator vanishes at the requested value of q."""


class NotInUPrime(UawError, ValueError):
    """The element has an equitable monomial with a negative power of y."""


class BoundTooSmall(UawError, ValueError):
    """The Omega-basis solve has no solution at the requested bound."""


class ParseError(UawError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ContextError(UawError, ValueError):
    """A letter does not belong to the selected algebra."""
