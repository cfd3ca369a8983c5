"""Exception hierarchy shared by every module."""


class AglabError(Exception):
    """Base class for all library errors."""


class InputError(AglabError, ValueError):
    """Malformed arguments: element out of range, bad permutation, etc."""


class SizeError(InputError):
    """Order exceeds the configured guard or a search bound."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ClosureError(AglabError):
    """A subset is not closed under the product; ``pair`` is a witness."""

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class InvalidWitness(AglabError):
    pass


class NotCompletelyInverse(AglabError):
    pass


class NotSemilatticeOfAbelianGroups(AglabError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class TheoremViolation(AglabError):
    """Measured data contradicts a proved statement.

    Only raised when the library itself is wrong; callers should treat it
    as fatal.
    """
