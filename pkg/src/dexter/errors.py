"""Exception types raised across the package."""


class DexterError(ValueError):
    """Base class for every error raised by :mod:`dexter`."""


class NotADyckWord(DexterError):
    pass


class NotBlockIndecomposable(DexterError):
    pass


class NotMovable(DexterError):
    pass


class ChoiceOutOfRange(DexterError):
    pass


class SizeTooLarge(DexterError):
    pass


class ElementNotInPoset(DexterError, KeyError):
    pass


class ElementSetMismatch(DexterError):
    pass


class EmptyOperand(DexterError):
    pass


class NotAnInterval(DexterError):
    pass


class NotInE(DexterError):
    pass


class NotCore(DexterError):
    pass


class DivisionNotExact(DexterError, ArithmeticError):
    pass


class LetterNotZero(DexterError):
    pass


class StepNotOne(DexterError):
    pass


class StartsAtGroundLevel(DexterError):
    pass


class SizeMismatch(DexterError):
    pass


class NotInF(DexterError):
    pass


class NotInImage(DexterError):
    pass


class LengthMismatch(DexterError):
    pass


class TooLarge(DexterError):
    pass


class NotALattice(DexterError):
    pass
