"""Exception hierarchy.

``InputError`` covers anything the caller got wrong (bad polynomial text,
mismatched rings, violated preconditions).  ``ConsistencyError`` means two
independent computations disagreed, which is always a bug in this package.
"""


class SymGeneraError(Exception):
    pass


class InputError(SymGeneraError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ConsistencyError(SymGeneraError):
    pass
