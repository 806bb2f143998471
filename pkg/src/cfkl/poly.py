"""Dense univariate polynomials over exact rationals.

Coefficients are :class:`fractions.Fraction` (always stored in lowest terms
with a positive denominator, so structural equality is exact equality).  The
zero polynomial is the empty coefficient tuple; its degree is undefined and
nothing here asks for it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]

HALF = Fraction(1, 2)


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints and "p/q" strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not a rational value: {value!r}")


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q", or plain "p" for integers."""
    return str(value)


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class Poly:
    """Immutable dense polynomial, index m holding the x^m coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def monomial(power: int, coeff: RationalLike = 1) -> "Poly":
        c = as_fraction(coeff)
        if c == 0:
            return Poly.zero()
        return Poly((0,) * power + (c,))

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def coeff(self, m: int) -> Fraction:
        """x^m coefficient (0 outside the stored range)."""
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "Poly":
        f = as_fraction(factor)
        if f == 0:
            return Poly.zero()
        return Poly(tuple(c * f for c in self.coeffs))

    def shift_up(self, k: int = 1) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(tuple(m * c for m, c in enumerate(self.coeffs) if m >= 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- evaluation & composition -----------------------------------------

    def __call__(self, point):
        """Horner evaluation; the point may be any ring element (Fraction,
        float, ExtElem, even another Poly)."""
        if not self.coeffs:
            return 0 * point if not isinstance(point, (int, float, Fraction)) else Fraction(0)
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * point + c
        return acc

    def compose_linear(self, a: RationalLike, b: RationalLike) -> "Poly":
        """p(a*x + b), exact Taylor shift by Horner in Poly arithmetic."""
        arg = Poly((as_fraction(b), as_fraction(a)))
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * arg + Poly((c,))
        return acc

    def substitute_square(self) -> "Poly":
        """p(x) -> p(s^2): spread coefficients onto even powers."""
        out = [Fraction(0)] * (2 * len(self.coeffs))
        for m, c in enumerate(self.coeffs):
            out[2 * m] = c
        return Poly(out)

    # -- serialization -----------------------------------------------------

    def to_strings(self) -> list[str]:
        """Ascending-power coefficient strings ("p/q" form)."""
        return [format_rational(c) for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    @staticmethod
    def from_strings(items: Sequence[str]) -> "Poly":
        return Poly(tuple(parse_rational(s) for s in items))

    @staticmethod
    def from_json(text: str) -> "Poly":
        return Poly.from_strings(json.loads(text))

    def __repr__(self) -> str:
        return f"Poly({[format_rational(c) for c in self.coeffs]})"


VALID_OFFSETS = (Fraction(0), HALF, Fraction(1))


@dataclass(frozen=True)
class OffsetPoly:
    """x^offset * body(x) with offset restricted to 0, 1/2 or 1.

    This is the natural domain of the differential operator
    x d/dx x d/dx - x, which maps each offset class into itself.
    """

    offset: Fraction
    body: Poly

    def __post_init__(self):
        if self.offset not in VALID_OFFSETS:
            raise ValueError(f"offset must be 0, 1/2 or 1, got {self.offset}")

    def strip_offset(self) -> Poly:
        """Divide by x^offset, i.e. return the plain polynomial body."""
        return self.body


def theta2_minus_x(p: OffsetPoly) -> OffsetPoly:
    """Apply the operator x(d/dx) x(d/dx) - x to x^offset * body(x).

    On x^(offset+m) the first part acts diagonally with factor (offset+m)^2
    while -x bumps the exponent, so the new body coefficients are
    b'_m = (offset+m)^2 * b_m - b_{m-1}.
    """
    alpha = p.offset
    b = p.body.coeffs
    out = [Fraction(0)] * (len(b) + 1)
    for m, bm in enumerate(b):
        out[m] += (alpha + m) ** 2 * bm
        out[m + 1] -= bm
    return OffsetPoly(alpha, Poly(out))


def central_difference(p: Poly) -> Poly:
    """p(x + 1/2) - p(x - 1/2)."""
    return p.compose_linear(1, HALF) - p.compose_linear(1, -HALF)


def poly_text(p: Poly, var: str = "x") -> str:
    """Human-readable form, descending powers, e.g. "x^2 - 5x + 1"."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for m in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[m]
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if m == 0:
            term = format_rational(mag)
        else:
            xpow = var if m == 1 else f"{var}^{m}"
            term = xpow if mag == 1 else f"{format_rational(mag)}{xpow}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)
