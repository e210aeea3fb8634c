"""Exception types raised by the sturm package."""


class SturmError(ValueError):
    """Base class for all package errors."""


class InvalidWord(SturmError):
    """A word contains a symbol other than ``a`` or ``b``."""


class EmptyWord(SturmError):
    """An operation that needs a non-empty word received the empty word."""


class InvalidDirective(SturmError):
    """A directive sequence is malformed or not normalized (d_0 = 0)."""


class InsufficientDirective(SturmError):
    """A finite directive sequence has too few terms for the requested computation."""


class InvalidOc(SturmError):
    """An oc bit string is malformed or starts with 0."""


class NotSturmianOc(SturmError):
    """No finite Sturmian word starting with ``a`` has the given oc sequence."""

    def __init__(self, position, message=None):
        self.position = position
        super().__init__(message or f"no Sturmian extension matches oc bit {position}")


class LengthGuard(SturmError):
    """An exhaustive enumeration was asked for more than its hard length limit."""
