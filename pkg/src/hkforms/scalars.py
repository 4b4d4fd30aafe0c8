"""Exact complex-rational scalars.

Every coefficient in the package is a pair of arbitrary-precision rationals
(real and imaginary part).  All identity checks downstream are therefore
exact equalities, never tolerance comparisons.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def parse_rational(s) -> Fraction:
    """Parse a rational given as "p/q" (or a plain integer string)."""
    try:
        return Fraction(s.strip() if isinstance(s, str) else s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed rational {s!r}") from exc


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class CRat:
    """Complex number with exact Fraction real/imaginary parts.

    Immutable by convention; Fraction keeps both parts reduced with a
    positive denominator, so zero is canonical.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    def __add__(self, other):
        other = _coerce(other)
        return CRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return CRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return CRat(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        return CRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        den = other.re * other.re + other.im * other.im
        if not den:
            raise ZeroDivisionError("division by zero CRat")
        return CRat(
            (self.re * other.re + self.im * other.im) / den,
            (self.im * other.re - self.re * other.im) / den,
        )

    def conjugate(self):
        return CRat(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, CRat):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"CRat({self.re})"
        return f"CRat({self.re}, {self.im})"

    def to_json(self):
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, obj):
        return cls(parse_rational(obj["re"]), parse_rational(obj["im"]))


def _coerce(x) -> CRat:
    if isinstance(x, CRat):
        return x
    if isinstance(x, (int, Fraction)):
        return CRat(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to CRat")


ZERO = CRat(0)
ONE = CRat(1)
IMAG = CRat(0, 1)
