"""Exception types shared across the package.

The CLI reports ``type(exc).__name__`` verbatim, so the class names are part
of the public surface.
"""


class CycloError(Exception):
    """Base class for every domain error raised by this package."""


class DivisionByZero(CycloError, ZeroDivisionError):
    pass


class NotDivisible(CycloError):
    def __init__(self, remainder_degree):
        self.remainder_degree = remainder_degree
        super().__init__(f"division leaves a remainder of degree {remainder_degree}")


class ZeroPolynomial(CycloError):
    pass


class NonIntegralCoefficient(CycloError):
    pass


class ZeroModulus(CycloError):
    pass


class NotRegular(CycloError):
    pass


class NotStronglyConnected(CycloError):
    pass


class FactorMissing(CycloError):
    pass


class NotAdjacency(CycloError):
    pass


class OddOrder(CycloError):
    pass


class RepresentationError(CycloError):
    """An internally verified representation property failed to hold."""


class NotMember(CycloError):
    pass


class BadDivisor(CycloError):
    pass


class BadShape(CycloError):
    pass


class NotFlat(CycloError):
    pass


class OddModulus(CycloError):
    pass


class NoInteriorMonomial(CycloError):
    pass


class BadRadical(CycloError):
    pass


class WrongFactorCount(CycloError):
    pass


class BudgetExhausted(CycloError):
    """Search stopped before settling the minimum.

    ``best`` is the best verified upper witness as ``(degree, signature)`` or
    ``None``; ``next_degree`` is the lowest degree not yet fully explored.
    """

    def __init__(self, n, next_degree, best=None):
        self.n = n
        self.next_degree = next_degree
        self.best = best
        msg = f"budget exhausted for n={n} at degree {next_degree}"
        if best is not None:
            msg += f"; best known upper witness has degree {best[0]}"
        super().__init__(msg)
