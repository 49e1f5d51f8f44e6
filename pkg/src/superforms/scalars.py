"""Exact scalar arithmetic over the Gaussian rationals Q(i).

Every coefficient in this package is a ``GaussianRational``: the complex number
``(re + im*i) / den`` stored as three integers with ``den > 0`` and
``gcd(re, im, den) == 1``.  This is the whole numeric tower — there are no
floats anywhere, and equality is exact structural equality of the normalized
triple.

The class is deliberately small and allocation-light (``__slots__``, no
``__dict__``), because the Grassmann-algebra layer above it multiplies huge
numbers of these in inner loops.
"""

from __future__ import annotations

from math import gcd


class GaussianRational:
    """A Gaussian rational (re + im*i)/den in lowest terms, den > 0."""

    __slots__ = ("re", "im", "den")

    def __init__(self, re: int = 0, im: int = 0, den: int = 1, _normalized: bool = False):
        if _normalized:
            self.re = re
            self.im = im
            self.den = den
            return
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            re, im, den = -re, -im, -den
        g = gcd(gcd(re, im), den)
        if g > 1:
            re //= g
            im //= g
            den //= g
        self.re = re
        self.im = im
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(num: int, den: int = 1) -> "GaussianRational":
        return GaussianRational(num, 0, den)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_one(self) -> bool:
        return self.re == 1 and self.im == 0 and self.den == 1

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        if self.den == other.den:
            return GaussianRational(self.re + other.re, self.im + other.im, self.den)
        return GaussianRational(
            self.re * other.den + other.re * self.den,
            self.im * other.den + other.im * self.den,
            self.den * other.den,
        )

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        if self.den == other.den:
            return GaussianRational(self.re - other.re, self.im - other.im, self.den)
        return GaussianRational(
            self.re * other.den - other.re * self.den,
            self.im * other.den - other.im * self.den,
            self.den * other.den,
        )

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im, self.den, _normalized=True)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c, self.den * other.den)

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        c, d = other.re, other.im
        norm = c * c + d * d
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        a, b = self.re, self.im
        # (a+bi)/(c+di) = (a+bi)(c-di)/|c+di|^2, denominators folded in.
        return GaussianRational(
            (a * c + b * d) * other.den,
            (b * c - a * d) * other.den,
            self.den * norm,
        )

    def inverse(self) -> "GaussianRational":
        return ONE / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im, self.den, _normalized=True)

    def scale(self, num: int, den: int = 1) -> "GaussianRational":
        return GaussianRational(self.re * num, self.im * num, self.den * den)

    # -- comparison / hashing --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.re, self.im, self.den))

    # -- display ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im}, {self.den})"

    def __str__(self) -> str:
        return format_scalar(self)


def format_scalar(z: GaussianRational) -> str:
    """Render in the literal grammar's coefficient form, without parentheses.

    Pure rationals render as ``a`` or ``a/b``; anything with an imaginary part
    renders as ``re+im i`` / ``re-im i`` with both parts explicit, e.g.
    ``0+1i``, ``3/2-1/2i``.
    """
    def rat(num: int, den: int) -> str:
        return f"{num}/{den}" if den != 1 else str(num)

    if z.im == 0:
        return rat(z.re, z.den)
    # normalize each part separately for display
    gre = gcd(z.re, z.den) or 1
    gim = gcd(z.im, z.den) or 1
    re_s = rat(z.re // gre, z.den // gre) if z.re else "0"
    im_num, im_den = z.im // gim, z.den // gim
    sign = "+" if im_num >= 0 else "-"
    return f"{re_s}{sign}{rat(abs(im_num), im_den)}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
MINUS_ONE = GaussianRational(-1)
I = GaussianRational(0, 1)
MINUS_I = GaussianRational(0, -1)
HALF = GaussianRational(1, 0, 2)


def integer(n: int) -> GaussianRational:
    return GaussianRational(n)
