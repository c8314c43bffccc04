"""Exact Gaussian rationals, enough for coefficients like (i t)^k / k!."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, "GaussianRational"]


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @staticmethod
    def lift(x: Scalar) -> "GaussianRational":
        return x if isinstance(x, GaussianRational) else GaussianRational(x, 0)

    def __add__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.lift(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> "GaussianRational":
        return self + (-GaussianRational.lift(other))

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.lift(other) - self

    def __mul__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.lift(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.lift(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero")
        p = self * o.conjugate()
        return GaussianRational(p.re / d, p.im / d)

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.lift(other) / self

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussianRational(0, 1)


def simplify(x: Scalar) -> Scalar:
    """Drop to a Fraction when the imaginary part vanishes."""
    if isinstance(x, GaussianRational) and x.im == 0:
        return x.re
    return Fraction(x) if isinstance(x, int) else x


def exact_abs(x: Scalar):
    """|x| as a Fraction for real x and as a float otherwise."""
    x = simplify(x)
    return abs(x)


def parse_scalar(text: str) -> Scalar:
    """Inverse of ``str`` on Fractions and Gaussian rationals."""
    text = text.strip()
    if not text.endswith("i"):
        return Fraction(text)
    body = text[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut <= 0:
        return GaussianRational(0, Fraction(body or "1"))
    return GaussianRational(Fraction(body[:cut]), Fraction(body[cut:]))
