"""Exception hierarchy. Each CLI exit code maps to one branch."""


class TopoError(Exception):
    exit_code = 1


class WidthMismatch(TopoError, ValueError):
    pass


class NotATopology(TopoError, ValueError):
    exit_code = 3

    def __init__(self, message, pair=None, failed=None):
        super().__init__(message)
        self.pair = pair
        self.failed = failed


class SizeLimitExceeded(TopoError, ValueError):
    exit_code = 4


class EmptyCarrier(TopoError, ValueError):
    pass


class UnknownIdentifier(TopoError, KeyError):
    exit_code = 2

    def __str__(self):
        return self.args[0] if self.args else "unknown identifier"


class GOpenUnsupported(TopoError, NotImplementedError):
    pass


class ParseError(TopoError, ValueError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + loc)
        self.line = line
        self.column = column


class DuplicateLabel(ParseError):
    pass


class UnknownLabel(ParseError):
    pass
