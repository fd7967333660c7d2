"""Exception hierarchy. Every error raised by the package derives from
:class:`SpreadMemError` so callers (the CLI in particular) can catch one type."""


class SpreadMemError(ValueError):
    pass


class DimensionMismatchError(SpreadMemError):
    pass


class InvalidVectorError(SpreadMemError):
    pass


class InvalidWeightMatrixError(SpreadMemError):
    pass


class CapExceededError(SpreadMemError):
    """State enumeration refused because 2**n exceeds the configured cap."""


class SearchSpaceExceededError(SpreadMemError):
    """Factorial order search refused because n exceeds ``max_n``."""


class ContractViolationError(SpreadMemError):
    pass


class ParseError(SpreadMemError):
    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)
