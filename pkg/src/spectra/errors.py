"""Exception hierarchy shared by all modules."""


class SpectraError(Exception):
    """Base class for every error raised by this package."""


class AsymmetricMatrix(SpectraError, ValueError):
    pass


class NegativeEntry(SpectraError, ValueError):
    pass


class NotRegular(SpectraError, ValueError):
    pass


class NotConnected(SpectraError, ValueError):
    pass


class NotSimple(SpectraError, ValueError):
    pass


class VertexOutOfRange(SpectraError, IndexError):
    pass


class UnknownName(SpectraError, KeyError):
    pass


class SizeCapExceeded(SpectraError, RuntimeError):
    """The exponential walk oracle would enumerate too many walks."""


class CapExceeded(SpectraError, ValueError):
    """A search specification is outside the configured caps."""


class NotPrime(SpectraError, ValueError):
    pass


class NotPrimePower(SpectraError, ValueError):
    pass


class DivisionByZero(SpectraError, ZeroDivisionError):
    pass


class PreconditionsNotMet(SpectraError, ValueError):
    pass


class MalformedInput(SpectraError, ValueError):
    pass
