"""Exception hierarchy.

Everything the library raises on bad input derives from :class:`MarkedOrderError`,
so callers (and the CLI) can separate domain failures from programming errors.
"""


class MarkedOrderError(ValueError):
    pass


class UnknownElementError(MarkedOrderError, KeyError):
    def __init__(self, element):
        super().__init__(f"unknown element {element!r}")
        self.element = element

    def __str__(self):
        return self.args[0]


class CycleError(MarkedOrderError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("relations contain a cycle through " + " < ".join(self.cycle))


class MarkingNotOrderPreserving(MarkedOrderError):
    def __init__(self, lower, upper, lower_value, upper_value):
        self.witness = (lower, upper)
        super().__init__(
            f"marking is not order-preserving: {lower} < {upper} "
            f"but {lower_value} > {upper_value}"
        )


class NotStrictError(MarkedOrderError):
    pass


class NotACoverError(MarkedOrderError):
    pass


class PartitionError(MarkedOrderError):
    """Blocks do not form a set partition of the ground set."""


class NotCompatibleError(MarkedOrderError):
    pass


class NotAFacePartitionError(MarkedOrderError):
    pass


class NotInPolyhedronError(MarkedOrderError):
    pass


class NotPointedError(MarkedOrderError):
    pass


class EmptyMarkingError(MarkedOrderError):
    pass


class SizeLimitError(MarkedOrderError):
    pass


class ParseError(MarkedOrderError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
