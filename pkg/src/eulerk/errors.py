"""Exception hierarchy shared by every eulerk module."""


class EulerKError(Exception):
    """Base class for all library errors."""


class GroupSpecError(EulerKError, ValueError):
    """A group-spec string or table literal is malformed."""


class LimitError(EulerKError):
    """A configured size limit would be exceeded."""


class InvalidSubgroupError(EulerKError, ValueError):
    """A purported normal subgroup fails its invariants."""


class NonNilpotentError(EulerKError):
    """A classifying-space leaf has a non-nilpotent group."""


class MissingValueError(EulerKError, KeyError):
    """A basis function has no value for a required basis element."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class OrderingError(EulerKError, ValueError):
    """Basis elements are not listed in the required total order."""


class ParseError(EulerKError, ValueError):
    """Syntax error in a space expression, with 1-based line/column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class ArityError(ParseError):
    """A node kind received the wrong number of arguments."""


class UnknownGroupError(ParseError):
    """A B(...) leaf names a group spec that cannot be built."""
