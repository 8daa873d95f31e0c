"""Exception types shared across the package."""


class TforgeError(Exception):
    """Base class for all package errors."""


# algebra
class NotPrime(TforgeError):
    pass


class DegreeZero(TforgeError):
    pass


class CapExceeded(TforgeError):
    pass


class GroupMismatch(TforgeError):
    pass


class MissingCopyIndex(TforgeError):
    pass


# designs
class BadParameters(TforgeError):
    pass


class MissingHole(TforgeError):
    pass


class BadGroupSizes(TforgeError):
    pass


class MissingColoring(TforgeError):
    pass


class NoSingletonPoint(TforgeError):
    pass


class BadShape(TforgeError):
    pass


# codes
class SymbolOutOfRange(TforgeError):
    pass


class TooFewWords(TforgeError):
    pass


class NotVerified(TforgeError):
    pass


class NotEquitable(TforgeError):
    pass


class DistanceTooSmall(TforgeError):
    pass


class MTooSmall(TforgeError):
    pass


# starters
class NotOneMod6(TforgeError):
    pass


class NotPrimePower(TforgeError):
    pass


class StarterInvalid(TforgeError):
    pass


# constructions
class KTooLarge(TforgeError):
    pass


class HoleMismatch(TforgeError):
    pass


class PointMapInvalid(TforgeError):
    pass


class ColorMissing(TforgeError):
    pass


class NoWitnessBlock(TforgeError):
    pass


class GroupCountMismatch(TforgeError):
    pass


class WMismatch(TforgeError):
    pass


class MissingIngredient(TforgeError):
    pass


class KeepOutOfRange(TforgeError):
    pass


# search
class InconsistentParams(TforgeError):
    pass


class BadKind(TforgeError):
    pass


class BudgetZero(TforgeError):
    pass
