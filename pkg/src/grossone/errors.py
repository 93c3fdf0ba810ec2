"""Exception hierarchy shared by every grossone module."""


class GrossError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(GrossError, ZeroDivisionError):
    pass


class InexactDivision(GrossError, ArithmeticError):
    """Division stopped at its term budget with a nonzero remainder."""


class InexactRoot(GrossError, ArithmeticError):
    """The requested root has an irrational grossdigit."""


class UnsupportedShape(GrossError, ValueError):
    pass


class NotInteger(GrossError, ValueError):
    pass


class UnsupportedPow(GrossError, ArithmeticError):
    pass


class DisplayOnly(GrossError, TypeError):
    """Arithmetic was attempted on a display-only symbolic record."""


class UnsupportedForm(GrossError, ValueError):
    pass


class UnsupportedLevel(GrossError, ValueError):
    pass


class UnsupportedSet(GrossError, ValueError):
    """A set expression could not be reduced to residue classes."""


class DegreeTooHigh(GrossError, ValueError):
    pass


class RatioOne(GrossError, ValueError):
    pass


class UnboundVariable(GrossError, NameError):
    pass


class ParseError(GrossError, ValueError):
    """Malformed input text; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
