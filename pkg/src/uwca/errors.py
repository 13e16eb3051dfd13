"""Exception types shared across the package."""


class UWError(Exception):
    """Base class for every error raised by uwca."""


class InvalidCoordinate(UWError, ValueError):
    pass


class CellNotInSlice(UWError, ValueError):
    pass


class UnknownSymmetry(UWError, ValueError):
    pass


class PathCapExceeded(UWError, RuntimeError):
    pass


class CellBudgetExceeded(UWError, RuntimeError):
    pass


class CellNotLive(UWError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class FertilityNotFinal(UWError, ValueError):
    pass


class PreconditionError(UWError, ValueError):
    pass


class StyleError(UWError, ValueError):
    """Render style is not valid for the requested lattice."""
