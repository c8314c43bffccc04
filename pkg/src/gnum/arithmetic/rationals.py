"""Graph rationals: graph integers over products of connected primes.

Numerator coefficients are ordinary rationals so that scalar division stays
inside the ring.  The reduced form cancels every denominator prime that
divides all numerator terms, which makes the representation unique.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from gnum.arithmetic.integers import (
    GraphInteger,
    format_terms,
    gi,
    mono_mul,
    mono_sort_key,
    monomial_of,
)
from gnum.graph import Graph
from gnum.naming import Monomial, monomial_name, monomial_vertices


class LocalizationError(ValueError):
    """Division by something outside the localizing monoid."""


def _cancel(terms: dict[Monomial, Fraction], den: Counter) -> tuple[dict[Monomial, Fraction], Counter]:
    if not terms:
        return {}, Counter()
    counted = {m: Counter(m) for m in terms}
    for p in list(den):
        k = min(min(c[p] for c in counted.values()), den[p])
        if not k:
            continue
        den[p] -= k
        if not den[p]:
            del den[p]
        for c in counted.values():
            c[p] -= k
    new_terms = {tuple(sorted(c.elements())): terms[m] for m, c in counted.items()}
    return new_terms, den


@dataclass(frozen=True)
class GraphRational:
    terms: tuple[tuple[Monomial, Fraction], ...]
    den: Monomial  # sorted prime certificates with repetition

    @classmethod
    def make(cls, terms: Mapping[Monomial, Fraction], den: Iterable[bytes] = ()) -> "GraphRational":
        clean = {m: Fraction(c) for m, c in terms.items() if c}
        clean, d = _cancel(clean, Counter(den))
        ordered = tuple(sorted(clean.items(), key=lambda t: mono_sort_key(t[0])))
        return cls(ordered, tuple(sorted(d.elements())))

    @classmethod
    def lift(cls, x) -> "GraphRational":
        if isinstance(x, GraphRational):
            return x
        if isinstance(x, Fraction):
            return cls.make({(): x})
        return cls.make({m: Fraction(c) for m, c in gi(x).terms})

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other) -> "GraphRational":
        other = GraphRational.lift(other)
        da, db = Counter(self.den), Counter(other.den)
        lcm = da | db
        acc: Counter = Counter()
        for terms, d in ((self.terms, da), (other.terms, db)):
            scale = tuple(sorted((lcm - d).elements()))
            for m, c in terms:
                acc[mono_mul(m, scale)] += c
        return GraphRational.make(acc, lcm.elements())

    __radd__ = __add__

    def __neg__(self) -> "GraphRational":
        return GraphRational(tuple((m, -c) for m, c in self.terms), self.den)

    def __sub__(self, other) -> "GraphRational":
        return self + (-GraphRational.lift(other))

    def __rsub__(self, other) -> "GraphRational":
        return GraphRational.lift(other) - self

    def __mul__(self, other) -> "GraphRational":
        other = GraphRational.lift(other)
        acc: Counter = Counter()
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                acc[mono_mul(m1, m2)] += c1 * c2
        return GraphRational.make(acc, self.den + other.den)

    __rmul__ = __mul__

    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "GraphRational":
        """Inverse of a scalar multiple of a connected-graph ratio."""
        if not self.is_single_term():
            raise LocalizationError(f"{self} is not a connected graph or a nonzero rational")
        (m, c), = self.terms
        return GraphRational.make({self.den: 1 / c}, m)

    def __truediv__(self, other) -> "GraphRational":
        return self * GraphRational.lift(other).inverse()

    def __pow__(self, k: int) -> "GraphRational":
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def norm(self) -> Fraction:
        """Σ |a| · c(term) / c(denominator)."""
        total = sum((abs(c) * monomial_vertices(m) for m, c in self.terms), Fraction(0))
        return total / monomial_vertices(self.den)

    def vertex_count(self) -> Fraction:
        return sum((c * monomial_vertices(m) for m, c in self.terms), Fraction(0)) / monomial_vertices(self.den)

    def is_integer(self) -> bool:
        return not self.den and all(c.denominator == 1 for _, c in self.terms)

    def to_integer(self) -> GraphInteger:
        if not self.is_integer():
            raise ValueError(f"{self} is not a graph integer")
        return GraphInteger.from_terms({m: int(c) for m, c in self.terms})

    def numerator(self) -> dict[Monomial, Fraction]:
        return self.as_dict()

    def to_json(self) -> dict:
        return {
            "numerator": [
                {"name": monomial_name(m), "vertices": monomial_vertices(m), "coefficient": str(c)}
                for m, c in self.terms
            ],
            "denominator": monomial_name(self.den) if self.den else None,
            "norm": str(self.norm()),
        }

    def __str__(self) -> str:
        num = format_terms(self.terms)
        if not self.den:
            return num
        if len(self.terms) > 1:
            num = f"({num})"
        return f"{num}/{monomial_name(self.den)}"


ONE = GraphRational.make({(): Fraction(1)})
ZERO = GraphRational.make({})


def gr_make(num, den: Iterable[Graph]) -> GraphRational:
    primes: list[bytes] = []
    for g in den:
        if not g.is_connected():
            raise LocalizationError("denominators must be connected nonempty graphs")
        primes.extend(monomial_of(g))
    return GraphRational.make(dict(GraphRational.lift(num).terms), primes)


def representation_norm(terms: Mapping[Monomial, Fraction], den: Monomial) -> Fraction:
    """Norm computed on an arbitrary, possibly unreduced, representation."""
    total = sum((abs(Fraction(c)) * monomial_vertices(m) for m, c in terms.items()), Fraction(0))
    return total / monomial_vertices(den)
