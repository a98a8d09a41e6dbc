"""Exception hierarchy shared by all modules."""


class DeutschPathsError(Exception):
    """Base class for every error raised by deutsch_paths."""


class InvalidSpecError(DeutschPathsError, ValueError):
    """Parameters outside the strip, negative sizes, or an enumeration too large."""


class VariableMismatchError(DeutschPathsError, TypeError):
    """Binary series operation on operands tagged with different variables."""


class TruncationError(DeutschPathsError, IndexError):
    """Coefficient requested at or beyond the truncation order."""


class NonUnitError(DeutschPathsError, ZeroDivisionError):
    """Operation needs a unit (or constant term 1 / 0) and did not get one."""


class ConsistencyError(DeutschPathsError, RuntimeError):
    """Two independent computations disagree, or an exactness assertion failed."""
