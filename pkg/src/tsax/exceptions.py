"""Exception types raised across the package."""


class InvalidInputError(ValueError):
    """Input data is empty, non-finite or otherwise unusable."""


class InvalidParameterError(ValueError):
    """A numeric parameter is outside its supported range."""


class IncompatibleRepresentationError(ValueError):
    """Two representations cannot be compared (different m, n or alphabet)."""


class UcrFormatError(InvalidInputError):
    """A UCR text file is malformed.

    ``line`` and ``column`` are 1-based and ``None`` when not applicable.
    """

    def __init__(self, message, path=None, line=None, column=None):
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.path = path
        self.line = line
        self.column = column
