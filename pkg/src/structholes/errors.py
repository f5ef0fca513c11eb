"""Exception hierarchy shared by the library and the CLI."""


class StructHolesError(Exception):
    """Base class for every error raised by this package."""


class InputError(StructHolesError):
    """Malformed or inconsistent input. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(InputError):
    pass


class SelfLoopError(InputError):
    pass


class DuplicateEdgeError(InputError):
    pass


class NonFiniteWeightError(InputError):
    pass


class UnsupportedFormatError(InputError):
    pass


class InvalidSpecError(InputError):
    pass


class DimensionMismatchError(StructHolesError, ValueError):
    pass


class MeasureDomainError(StructHolesError):
    """The graph is outside the domain on which a measure is defined."""


class NotBinaryUndirectedError(MeasureDomainError):
    pass


class ZeroDenominatorError(MeasureDomainError):
    """A non-isolated node has zero total mutual weight (only possible
    with negative weights)."""

    def __init__(self, nodes):
        self.nodes = list(nodes)
        shown = ", ".join(map(str, self.nodes[:5]))
        more = "" if len(self.nodes) <= 5 else f" (+{len(self.nodes) - 5} more)"
        super().__init__(f"zero total mutual weight at non-isolated node(s): {shown}{more}")
