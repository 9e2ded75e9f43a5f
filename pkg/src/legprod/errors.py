"""Exception hierarchy shared by every module."""


class LegprodError(ValueError):
    """Base class; a violated mathematical precondition."""


class NotAnOddPrime(LegprodError):
    pass


class DenominatorDivisible(LegprodError):
    pass


class NumeratorDivisible(LegprodError):
    pass


class SDivisible(LegprodError):
    pass


class DuplicateShift(LegprodError):
    pass


class DegenerateShift(LegprodError):
    pass


class BadFormModulus(LegprodError):
    pass


class BadDiscriminant(LegprodError):
    pass


class WrongResidueClass(LegprodError):
    pass


class UnknownTheorem(LegprodError):
    pass


class EmptyRange(LegprodError):
    pass


class BadModulus(LegprodError):
    pass


class BadParameter(LegprodError):
    pass
