"""Exception types raised across the package."""


class DivisionByZero(ZeroDivisionError):
    pass


class InexactDivision(ArithmeticError):
    """The dividend is not a polynomial multiple of the divisor."""


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class OddGroundSet(ValueError):
    pass


class UnknownIndex(KeyError):
    pass


class OddResult(ValueError):
    pass


class CondensationPivotZero(ArithmeticError):
    """A central minor vanished, so the condensation recurrence cannot divide by it."""

    def __init__(self, index_set):
        super().__init__(
            "condensation pivot vanishes on index set %s" % (tuple(index_set),)
        )
        self.index_set = tuple(index_set)


class NonConstantEntry(ValueError):
    pass


class ParityViolation(ValueError):
    pass
