"""Exception hierarchy shared by every module."""


class FairLNCError(Exception):
    """Base class for all package errors."""


class ValidationError(FairLNCError, ValueError):
    """Inputs violate a documented precondition."""


class ConfigError(FairLNCError):
    """A configuration file or object is malformed or inconsistent."""


class ParseError(FairLNCError):
    """A data file could not be parsed.

    ``row`` is the 1-based data row (header excluded) and ``column`` the
    column name, when known.
    """

    def __init__(self, message, row=None, column=None):
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.row = row
        self.column = column


class FetchError(FairLNCError):
    def __init__(self, message, status=None):
        super().__init__(message if status is None else f"{message} (HTTP {status})")
        self.status = status


class SplitError(ValidationError):
    pass


class DegenerateFitError(FairLNCError):
    """A learner was asked to fit data containing a single class."""


class CorrectionError(FairLNCError):
    pass
