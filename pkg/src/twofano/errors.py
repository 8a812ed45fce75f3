"""Exception types raised across the package."""


class TwoFanoError(ValueError):
    """Base class for all errors raised by twofano."""


class RingMismatchError(TwoFanoError):
    """Two classes from distinct Chow rings were combined."""


class PreconditionError(TwoFanoError):
    """An argument violates the documented precondition of an operation."""


class InconsistentBundleError(TwoFanoError):
    """Formal exact-sequence data does not describe a bundle of the stated rank."""


class SpecParseError(TwoFanoError):
    """A textual space specification could not be parsed."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"parse error at column {position + 1}: {message}")
