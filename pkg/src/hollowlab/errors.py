"""Exception hierarchy shared by every module of the package."""


class HollowLabError(Exception):
    """Base class for all errors raised by hollowlab."""


class InvalidModulus(HollowLabError, ValueError):
    pass


class EmptyProduct(HollowLabError, ValueError):
    pass


class NotPrime(HollowLabError, ValueError):
    pass


class InvalidPolynomial(HollowLabError, ValueError):
    pass


class NotARing(HollowLabError, ValueError):
    """A multiplication/addition table failed the axiom scan.

    ``axiom`` names the law that broke, ``witness`` is the offending element
    tuple (indices into the table).
    """

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"{axiom} fails at {self.witness}")


class RingMismatch(HollowLabError, ValueError):
    pass


class NotAnIdeal(HollowLabError, ValueError):
    pass


class UnknownIdeal(HollowLabError, KeyError):
    pass


class NotASubmodule(HollowLabError, ValueError):
    pass


class ZeroIdealUndefined(HollowLabError, ValueError):
    pass


class NotMaximal(HollowLabError, ValueError):
    pass


class DimensionTooSmall(HollowLabError, ValueError):
    pass


class ImproperSubspace(HollowLabError, ValueError):
    pass


class NotGcdRing(HollowLabError, ValueError):
    pass


class UnknownCheck(HollowLabError, KeyError):
    pass


class UnknownProperty(HollowLabError, KeyError):
    pass


class OrderCapExceeded(HollowLabError, ValueError):
    pass


class DuplicateRing(HollowLabError, ValueError):
    pass


class UnknownRing(HollowLabError, ValueError):
    pass
