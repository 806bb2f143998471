"""The quadratic extension ring Q[tau][y] / (y^2 + tau).

Elements are a(tau) + y*b(tau); the generator y squares to -tau, so y plays
the role of i*sqrt(tau) and polynomial identities involving i*sqrt(tau) can
be checked with exact rational arithmetic.  Every product is reduced eagerly,
keeping the y-degree below 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, RationalLike, as_fraction

# multiplication by tau = shift of the tau-polynomial
_TAU = Poly((0, 1))


@dataclass(frozen=True)
class ExtElem:
    real: Poly
    ypart: Poly

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_poly(p: Poly) -> "ExtElem":
        return ExtElem(p, Poly.zero())

    @staticmethod
    def scalar(c: RationalLike) -> "ExtElem":
        return ExtElem(Poly((as_fraction(c),)), Poly.zero())

    @staticmethod
    def y() -> "ExtElem":
        return ExtElem(Poly.zero(), Poly.one())

    @staticmethod
    def y_plus(c: RationalLike) -> "ExtElem":
        return ExtElem(Poly((as_fraction(c),)), Poly.one())

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "ExtElem") -> "ExtElem":
        return ExtElem(self.real + other.real, self.ypart + other.ypart)

    def __neg__(self) -> "ExtElem":
        return ExtElem(-self.real, -self.ypart)

    def __sub__(self, other: "ExtElem") -> "ExtElem":
        return self + (-other)

    def __mul__(self, other) -> "ExtElem":
        if isinstance(other, (int, Fraction)):
            return ExtElem(self.real.scale(other), self.ypart.scale(other))
        if isinstance(other, Poly):
            return ExtElem(self.real * other, self.ypart * other)
        if not isinstance(other, ExtElem):
            return NotImplemented
        # (a + y b)(c + y d) = (ac - tau*bd) + y(ad + bc)
        a, b = self.real, self.ypart
        c, d = other.real, other.ypart
        return ExtElem(a * c - _TAU * (b * d), a * d + b * c)

    __rmul__ = __mul__

    def scale_tau(self) -> "ExtElem":
        """Multiply by the scalar tau."""
        return ExtElem(_TAU * self.real, _TAU * self.ypart)

    def is_zero(self) -> bool:
        return self.real.is_zero() and self.ypart.is_zero()

    def y_cofactor(self) -> Poly:
        """For an element that is an exact multiple of y, return the cofactor.

        Raises if the real part is nonzero: "division by y" is only defined
        for elements of the form y*q(tau).
        """
        if not self.real.is_zero():
            raise ValueError(f"element is not a multiple of y: real part {self.real!r}")
        return self.ypart

    def __repr__(self) -> str:
        return f"ExtElem(real={self.real!r}, ypart={self.ypart!r})"


def poly_eval_ext(p: Poly, point: ExtElem) -> ExtElem:
    """Horner evaluation of a polynomial at an extension-ring point."""
    acc = ExtElem.scalar(0)
    for c in reversed(p.coeffs):
        acc = acc * point + ExtElem.scalar(c)
    return acc
