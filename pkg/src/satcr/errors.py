"""Exception hierarchy shared by all satcr modules."""


class SatcrError(Exception):
    """Base class for every error raised by satcr."""


class NonPrime(SatcrError, ValueError):
    pass


class DegreeZero(SatcrError, ValueError):
    pass


class FieldTooLarge(SatcrError, ValueError):
    pass


class WrongCharacteristic(SatcrError, ValueError):
    pass


class DimensionMismatch(SatcrError, ValueError):
    pass


class Singular(SatcrError, ArithmeticError):
    pass


class InvalidTypeRank(SatcrError, ValueError):
    pass


class NonDominant(SatcrError, ValueError):
    pass


class TooLarge(SatcrError, ValueError):
    pass


class NegativeMultiplicity(SatcrError, ArithmeticError):
    """Subtracting a character left a negative multiplicity.

    Signals that the character table used for this (type, p) is missing
    modular information; the decomposition is not guessed.
    """


class Inconclusive(SatcrError, RuntimeError):
    pass


class OrderTooLarge(SatcrError, ValueError):
    pass


class CharTooSmall(SatcrError, ValueError):
    pass


class CapExceeded(SatcrError, RuntimeError):
    pass


class NotInParabolic(SatcrError, ValueError):
    pass


class NotAChain(SatcrError, ValueError):
    pass
