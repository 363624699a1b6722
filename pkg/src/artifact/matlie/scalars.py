"""Exact scalars: rationals (``fractions.Fraction`` / ``int``) and Gaussian rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


class QI:
    """Gaussian rational ``re + im * i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0) -> None:
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> "QI":
        return x if isinstance(x, QI) else QI(x, 0)

    def __add__(self, other):
        o = QI.coerce(other)
        return QI(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __sub__(self, other):
        o = QI.coerce(other)
        return QI(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return QI.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, QI):
            return QI(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)
        return QI(self.re * other, self.im * other)

    __rmul__ = __mul__

    def conjugate(self) -> "QI":
        return QI(self.re, -self.im)

    def __truediv__(self, other):
        if isinstance(other, QI):
            n = other.re * other.re + other.im * other.im
            return self * other.conjugate() * Fraction(1, 1) * (1 / n)
        return QI(self.re / other, self.im / other)

    def __rtruediv__(self, other):
        return QI.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, QI):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __repr__(self) -> str:
        return f"QI({self.re}, {self.im})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = QI(0, 1)


def exact_str(x) -> str:
    """JSON-safe exact rendering: integers stay integers, rationals become ``"p/q"``."""
    if isinstance(x, QI):
        return str(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_json_number(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
