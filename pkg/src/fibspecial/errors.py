"""Exception hierarchy shared by all modules."""


class FibSpecialError(Exception):
    """Base class for every error raised by this package."""


class CoefficientOverflow(FibSpecialError, OverflowError):
    """A coefficient left the signed 64-bit range."""


class InvalidModulus(FibSpecialError, ValueError):
    pass


class ModulusMismatch(FibSpecialError, ValueError):
    pass


class OutOfRange(FibSpecialError, ValueError):
    pass


class DomainError(FibSpecialError, ValueError):
    pass


class InvalidWindow(FibSpecialError, ValueError):
    pass


class LemmaViolation(FibSpecialError, ArithmeticError):
    """The residue difference after mod-3 reduction is not a multiple of 1+T+T^2.

    Carries the offending vector and difference so the witness can be replayed.
    """

    def __init__(self, vector, difference):
        self.vector = tuple(vector)
        self.difference = tuple(difference)
        super().__init__(
            f"R(delta(A)) - R(delta(eps(A))) = {self.difference} is not k*(1,1,1) for A={self.vector}"
        )
