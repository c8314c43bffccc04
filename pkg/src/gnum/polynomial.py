"""Integer polynomials in one variable ``t`` and Kronecker factor search."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterable, Iterator, Sequence

MAX_KRONECKER_DEGREE = 12


class UnsupportedDegree(ValueError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...]  # index = degree, no trailing zeros

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        result = IntPolynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def content(self) -> int:
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        if self.coefficients and self.coefficients[-1] < 0:
            g = -g
        return g

    def primitive(self) -> "IntPolynomial":
        g = self.content()
        return IntPolynomial(c // g for c in self.coefficients) if g else self

    def divides(self, other: "IntPolynomial") -> bool:
        return exact_quotient(other, self) is not None

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def exact_quotient(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial | None:
    """``num / den`` if it is an integer polynomial, else None."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(num.coefficients)
    d = den.coefficients
    if len(rem) < len(d):
        return IntPolynomial() if not rem else None
    quot = [0] * (len(rem) - len(d) + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = rem[k + len(d) - 1]
        if top % d[-1]:
            return None
        q = top // d[-1]
        quot[k] = q
        for i, c in enumerate(d):
            rem[k + i] -= q * c
    if any(rem):
        return None
    return IntPolynomial(quot)


def _divisors(v: int) -> list[int]:
    v = abs(v)
    small = [d for d in range(1, int(v**0.5) + 1) if v % d == 0]
    return sorted(set(small + [v // d for d in small]))


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (ascending) of the interpolating polynomial."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += basis[k] * ys[i] / denom
    return coeffs


def _sample_points() -> Iterator[int]:
    k = 0
    while True:
        yield k
        if k > 0:
            yield -k
        k += 1


def kronecker_factor(p: IntPolynomial) -> IntPolynomial | None:
    """A factor of degree 1..deg/2 of a primitive ``p``, or None if irreducible."""
    n = p.degree
    if n > MAX_KRONECKER_DEGREE:
        raise UnsupportedDegree(f"degree {n} exceeds {MAX_KRONECKER_DEGREE}")
    if n < 2:
        return None
    # candidate nodes with their values, nonzero; a zero value is a root
    pool: list[tuple[int, int]] = []
    for x in _sample_points():
        v = p(x)
        if v == 0:
            return IntPolynomial([-x, 1])
        pool.append((x, v))
        if len(pool) >= 2 * n + 6:
            break
    pool.sort(key=lambda xv: (len(_divisors(xv[1])), abs(xv[0])))
    for d in range(1, n // 2 + 1):
        nodes = pool[: d + 1]
        xs = [x for x, _ in nodes]
        choices = []
        for idx, (_, v) in enumerate(nodes):
            divs = _divisors(v)
            choices.append(divs if idx == 0 else divs + [-q for q in divs])
        for ys in product(*choices):
            coeffs = _interpolate(xs, ys)
            if any(c.denominator != 1 for c in coeffs):
                continue
            h = IntPolynomial(int(c) for c in coeffs)
            if h.degree != d:
                continue
            if exact_quotient(p, h) is not None:
                return h
    return None


def is_irreducible(p: IntPolynomial) -> bool:
    """Irreducible over the rationals (integer content is ignored)."""
    if p.degree > MAX_KRONECKER_DEGREE:
        raise UnsupportedDegree(f"degree {p.degree} exceeds {MAX_KRONECKER_DEGREE}")
    if p.degree < 1:
        return False
    return kronecker_factor(p.primitive()) is None
