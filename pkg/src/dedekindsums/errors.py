"""Exception hierarchy shared by every module of the package."""


class DedekindSumsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(DedekindSumsError, ValueError):
    """Arguments violate a documented precondition (coprimality, positivity, ...)."""


class SingularityError(DedekindSumsError, ZeroDivisionError):
    """An exact inverse was requested for a non-invertible object."""


class InternalInconsistencyError(DedekindSumsError, ArithmeticError):
    """A computed value contradicts a theorem, e.g. a non-integral partition count.

    Never a valid output; it always points at a bug.
    """
