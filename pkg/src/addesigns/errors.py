"""Exception hierarchy shared by all modules."""


class AddesignsError(Exception):
    """Base class for every error raised by this package."""


# --- finite field errors ---

class NotPrime(AddesignsError):
    pass


class NotPrimitivePolynomial(AddesignsError):
    pass


class DivisionByZero(AddesignsError, ZeroDivisionError):
    pass


class FieldMismatch(AddesignsError):
    pass


class LogOfZero(AddesignsError):
    pass


class OrderDoesNotDivide(AddesignsError):
    pass


class NotCoprime(AddesignsError):
    pass


class FieldTooLarge(AddesignsError):
    pass


# --- geometry errors ---

class DimensionOutOfRange(AddesignsError):
    pass


# --- design errors ---

class EmptyDesign(AddesignsError):
    pass


class UnequalBlockSizes(AddesignsError):
    pass


class NotTwoDesign(AddesignsError):
    pass


class NotDifferenceSet(AddesignsError):
    pass


class BadModulus(AddesignsError):
    pass


# --- embedding errors ---

class GroupMismatch(AddesignsError):
    pass


class NotSymmetric(AddesignsError):
    pass


class DegenerateOrder(AddesignsError):
    pass


class BadPrime(AddesignsError):
    pass


class NoZeroSigma(AddesignsError):
    pass


class SizeMismatch(AddesignsError):
    pass


class NotSubspaceBlocks(AddesignsError):
    pass


class TooLarge(AddesignsError):
    pass
