"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`SkewresError`. The two intermediate classes decide the CLI exit
code: :class:`ExpressionError` maps to 2, :class:`MathPreconditionError`
maps to 3.
"""


class SkewresError(Exception):
    """Base class for all library errors."""


class ExpressionError(SkewresError):
    """The text of an expression could not be turned into a value."""


class ExpressionSyntaxError(ExpressionError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownSymbol(ExpressionError):
    pass


class NonCentralDenominator(ExpressionError):
    pass


class MathPreconditionError(SkewresError):
    """An operation was called outside of its mathematical domain."""


class ConfigError(MathPreconditionError):
    pass


class CharacteristicDividesR(MathPreconditionError):
    pass


class DivisionByZero(MathPreconditionError, ZeroDivisionError):
    pass


class NegativeValuation(MathPreconditionError):
    pass


class BothZero(MathPreconditionError):
    pass


class ZeroInput(MathPreconditionError):
    pass


class ZeroInverse(MathPreconditionError, ZeroDivisionError):
    pass


class ZeroToNegativePower(MathPreconditionError, ZeroDivisionError):
    pass


class ZeroC(MathPreconditionError):
    pass


class ZeroPoint(MathPreconditionError):
    pass


class MixedModuli(MathPreconditionError):
    pass


class InsufficientPrecision(MathPreconditionError):
    pass


class ZeroToPrecision(MathPreconditionError):
    pass


class UnsplitDenominator(MathPreconditionError):
    pass


class SimplePoleRequired(MathPreconditionError):
    pass


class NotRegular(MathPreconditionError):
    pass


class NonCentralCoefficient(MathPreconditionError):
    pass
