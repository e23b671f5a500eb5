"""Exceptions raised by circuit arithmetic, parsing and the solvers."""


class BaumslagError(Exception):
    pass


class BudgetExceeded(BaumslagError):
    """A value is too large to materialise within the requested bit budget."""

    def __init__(self, message="value exceeds bit budget", *, bits=None):
        super().__init__(message)
        self.bits = bits


class NonInteger(BaumslagError):
    """Some vertex has a negative exponent sum, so its value is not an integer."""


class NotDivisible(BaumslagError):
    """The dividend is not divisible by the requested power of two."""


class CircuitFormatError(BaumslagError, ValueError):
    """Malformed circuit text."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class WordSyntaxError(BaumslagError, ValueError):
    """Malformed word text."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"position {position}: {message}"
        super().__init__(message)
        self.position = position


class GrowthViolation(BaumslagError, AssertionError):
    """A size counter of the solver broke its accounting bound."""
