"""Exception hierarchy shared by every module."""


class MonomultError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(MonomultError, ValueError):
    """Inputs of incompatible shape (exponent length, ambient count)."""


class DegenerateInputError(MonomultError, ValueError):
    """Operation undefined on the zero or unit ideal."""


class ResourceLimitError(MonomultError):
    """A configured enumeration or expansion cap was exceeded."""


class HypothesisViolatedError(MonomultError):
    """A closed-form multiplicity formula was requested outside its hypothesis."""


class NotSquareFreeError(MonomultError, ValueError):
    pass


class NotACoverError(MonomultError, ValueError):
    pass


class ParseError(MonomultError, ValueError):
    """Syntax or semantic error in an ideal or graph specification."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
