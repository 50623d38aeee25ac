"""
Error Types
Exception hierarchy shared by the max-algebra library and its command line
"""


class MaxAlgebraError(Exception):
    """Base class for every error raised by the library"""


class DimensionError(MaxAlgebraError):
    """Shapes do not match, inner dimensions disagree, or a square matrix was required"""


class ValidationError(MaxAlgebraError):
    """A precondition on the values of an argument does not hold"""


class ClassificationError(ValidationError):
    """A matrix expected to be a (0,1)-matrix has an entry that is neither 0 nor 1"""

    def __init__(self, row, col, value):
        self.row = row
        self.col = col
        self.value = value
        super().__init__(
            f"entry ({row + 1},{col + 1}) = {value!r} is neither 0 nor 1"
        )


class CapacityError(MaxAlgebraError):
    """An enumeration bound or an oracle budget would be exceeded"""


class NotMajorizedError(MaxAlgebraError):
    """A witness was requested for vectors that are not max-majorized"""


class ParseError(MaxAlgebraError):
    """Malformed matrix or vector input"""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{location}")


class ConfigError(MaxAlgebraError):
    """An environment variable or flag holds an unusable value"""
