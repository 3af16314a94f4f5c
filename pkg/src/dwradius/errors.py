"""Exception hierarchy shared by every module."""


class DWRError(Exception):
    """Base class for all package errors."""


class InvalidMatrix(DWRError, ValueError):
    """Input is not a finite two-dimensional array."""


class NotHermitian(DWRError, ValueError):
    pass


class NoConvergence(DWRError, RuntimeError):
    pass


class NegativeSpectrum(DWRError, ValueError):
    pass


class DimensionMismatch(DWRError, ValueError):
    pass


class BadExponent(DWRError, ValueError):
    pass


class NonPositiveNorm(DWRError, ValueError):
    pass


class ZeroBlock(DWRError, ValueError):
    pass


class BadDimension(DWRError, ValueError):
    pass


class ParseError(DWRError, ValueError):
    pass


class LayoutError(DWRError, ValueError):
    pass
