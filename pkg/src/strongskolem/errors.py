"""Exception hierarchy shared by all modules."""


class SkolemError(Exception):
    """Base class for every error raised by this package."""


class NotAUnit(SkolemError, ValueError):
    """An element that must be invertible modulo n is not."""


class ZeroElement(SkolemError, ValueError):
    pass


class BadModulus(SkolemError, ValueError):
    pass


class StructuralError(SkolemError, ValueError):
    """A candidate pairing is malformed (wrong pair count, repeated element, ...)."""


class NotAStarter(SkolemError, ValueError):
    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class BadParams(SkolemError, ValueError):
    pass


class NoLambda(SkolemError):
    """No multiplier splits the unit group into the four required cosets."""


class VerificationFailed(SkolemError):
    def __init__(self, message, classification=None):
        super().__init__(message)
        self.classification = classification


class ValidationFailed(SkolemError):
    pass


class BudgetExhausted(SkolemError):
    """Search hit its node budget; ``partial`` holds what was found so far."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
