"""Exception hierarchy shared by all modules."""


class TverbergError(Exception):
    """Base class for every error raised by this package."""


class InvalidComplex(TverbergError, ValueError):
    pass


class EmptyFacet(InvalidComplex):
    pass


class DuplicateCell(InvalidComplex):
    pass


class DanglingBoundary(InvalidComplex):
    pass


class BadGrading(InvalidComplex):
    pass


class NotRegular(InvalidComplex):
    pass


class UnknownCell(TverbergError, KeyError):
    def __str__(self):
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""


class EmptyComplex(TverbergError, ValueError):
    pass


class SizeLimitExceeded(TverbergError, RuntimeError):
    pass


class GuardExceeded(TverbergError, ValueError):
    pass


class LoopEdge(InvalidComplex):
    pass


class ParseError(TverbergError, ValueError):
    pass
