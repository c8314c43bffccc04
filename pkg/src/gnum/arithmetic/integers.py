"""Graph integers: signed integer combinations of connected iso-classes.

A connected graph is stored as its sorted multiset of prime factors (by
certificate).  Unique factorization of connected graphs makes this a faithful
iso-class key, and it turns the strong product into multiset union, so large
powers never need to be materialized.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from gnum.canonical import certificate, graph_from_certificate
from gnum.factoring import prime_certificates
from gnum.functionals import euler_characteristic
from gnum.graph import Graph, complete, component_vertex_sets, strong_product, sum_graphs
from gnum.naming import Monomial, monomial_name, monomial_vertices

MAX_MATERIALIZED_VERTICES = 4096


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


def mono_sort_key(mono: Monomial) -> tuple[int, Monomial]:
    return (monomial_vertices(mono), mono)


@lru_cache(maxsize=None)
def monomial_graph(mono: Monomial) -> Graph:
    """Canonical graph of a prime product (materialized; mind the size)."""
    n = monomial_vertices(mono)
    if n > MAX_MATERIALIZED_VERTICES:
        raise OverflowError(f"{n} vertices is too large to materialize")
    g = complete(1)
    for c in mono:
        g = strong_product(g, graph_from_certificate(c))
    return graph_from_certificate(certificate(g))


@lru_cache(maxsize=None)
def prime_euler_characteristic(cert: bytes) -> int:
    return euler_characteristic(graph_from_certificate(cert))


def monomial_of(g: Graph) -> Monomial:
    if not g.is_connected():
        raise ValueError("a monomial is a connected graph")
    return prime_certificates(g)


def _normalize(terms: Mapping[Monomial, int]) -> tuple[tuple[Monomial, int], ...]:
    return tuple(sorted(((m, c) for m, c in terms.items() if c), key=lambda t: mono_sort_key(t[0])))


@dataclass(frozen=True)
class GraphInteger:
    terms: tuple[tuple[Monomial, int], ...]

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, int]) -> "GraphInteger":
        return cls(_normalize(terms))

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphInteger":
        counts: Counter = Counter()
        for vs in component_vertex_sets(g):
            counts[monomial_of(g.induced(vs))] += 1
        return cls.from_terms(counts)

    @classmethod
    def from_int(cls, n: int) -> "GraphInteger":
        return cls.from_terms({(): n})

    @classmethod
    def monomial(cls, mono: Monomial, coefficient: int = 1) -> "GraphInteger":
        return cls.from_terms({tuple(sorted(mono)): coefficient})

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "GraphInteger | int") -> "GraphInteger":
        other = _lift(other)
        acc = Counter(self.as_dict())
        for m, c in other.terms:
            acc[m] += c
        return GraphInteger.from_terms(acc)

    __radd__ = __add__

    def __neg__(self) -> "GraphInteger":
        return GraphInteger(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "GraphInteger | int") -> "GraphInteger":
        return self + (-_lift(other))

    def __rsub__(self, other: "GraphInteger | int") -> "GraphInteger":
        return _lift(other) - self

    def __mul__(self, other: "GraphInteger | int") -> "GraphInteger":
        other = _lift(other)
        acc: Counter = Counter()
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                acc[mono_mul(m1, m2)] += c1 * c2
        return GraphInteger.from_terms(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GraphInteger":
        if k < 0:
            raise ValueError("negative powers need the rationals")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def norm(self) -> int:
        """Σ |multiplicity| · vertex count; the positive/negative split attains the minimum."""
        return sum(abs(c) * monomial_vertices(m) for m, c in self.terms)

    def vertex_count(self) -> int:
        return sum(c * monomial_vertices(m) for m, c in self.terms)

    def component_count(self) -> int:
        return sum(c for _, c in self.terms)

    def euler_characteristic(self) -> int:
        total = 0
        for m, c in self.terms:
            chi = 1
            for p in m:
                chi *= prime_euler_characteristic(p)
            total += c * chi
        return total

    def constant_term(self) -> int:
        return self.as_dict().get((), 0)

    def is_graph(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def positive_part(self) -> "GraphInteger":
        return GraphInteger(tuple(t for t in self.terms if t[1] > 0))

    def negative_part(self) -> "GraphInteger":
        return GraphInteger(tuple((m, -c) for m, c in self.terms if c < 0))

    def to_graph(self) -> Graph:
        if not self.is_graph():
            raise ValueError("only nonnegative graph integers are graphs")
        return sum_graphs(monomial_graph(m) for m, c in self.terms for _ in range(c))

    def certificate_terms(self) -> dict[bytes, int]:
        """Multiplicities keyed by the certificate of each materialized component."""
        return {certificate(monomial_graph(m)): c for m, c in self.terms}

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "name": monomial_name(m),
                    "vertices": monomial_vertices(m),
                    "factors": [graph_from_certificate(p).to_json() for p in m],
                    "multiplicity": c,
                }
                for m, c in self.terms
            ],
            "norm": self.norm(),
        }

    def __str__(self) -> str:
        return format_terms(self.terms)


def format_terms(terms: Iterable[tuple[Monomial, object]]) -> str:
    pieces = []
    for m, c in terms:
        name = monomial_name(m)
        neg = c < 0
        mag = -c if neg else c
        if not m:
            body = str(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{mag}*{name}"
        pieces.append(("-" if neg else "+", body))
    if not pieces:
        return "0"
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def _lift(x) -> GraphInteger:
    if isinstance(x, GraphInteger):
        return x
    if isinstance(x, int):
        return GraphInteger.from_int(x)
    if isinstance(x, Graph):
        return GraphInteger.from_graph(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a graph integer")


ZERO = GraphInteger(())
ONE = GraphInteger.from_int(1)


def gi(x) -> GraphInteger:
    return _lift(x)


def gi_add(x: GraphInteger, y: GraphInteger) -> GraphInteger:
    return x + y


def gi_neg(x: GraphInteger) -> GraphInteger:
    return -x


def gi_mul(x: GraphInteger, y: GraphInteger) -> GraphInteger:
    return x * y


def gi_norm(x: GraphInteger) -> int:
    return x.norm()
