"""Strong-product division, prime factorization and primality certificates.

Connected graphs factor uniquely into connected primes, so dividing by a
known factor has at most one answer.  Candidates for the quotient are pruned
by invariants that behave predictably under the strong product before any
product is formed and compared by certificate:

* vertex counts and clique numbers multiply;
* edges satisfy e(AB) = n_A e_B + n_B e_A + 2 e_A e_B;
* closed degrees deg + 1 multiply, so their multisets divide;
* curvature multisets multiply the same way.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from gnum.canonical import certificate, graph_from_certificate
from gnum.catalogue import MAX_CATALOGUE_VERTICES, connected_class_certificates
from gnum.functionals import clique_number, curvature, euler_polynomial
from gnum.graph import Graph, _bits, complete, strong_product
from gnum.polynomial import MAX_KRONECKER_DEGREE, is_irreducible


class FactorSearchOverflow(ValueError):
    """The exhaustive search would leave the catalogue range."""


def _is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _int_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _closed_degrees(g: Graph) -> list[int]:
    return sorted(m.bit_count() + 1 for m in g.adj)


def _divide_multiset(product: Iterable[int], factor: Iterable[int]) -> list[int] | None:
    """The multiset B with {a·b} = product, for positive integers; None if none exists.

    The largest remaining product is always max(a) times the largest remaining b.
    """
    remaining = Counter(product)
    a = sorted(factor)
    if not a or sum(remaining.values()) % len(a):
        return None
    top = a[-1]
    quotient = []
    while remaining:
        m = max(remaining)
        if m % top:
            return None
        b = m // top
        for x in a:
            key = x * b
            if remaining[key] <= 0:
                return None
            remaining[key] -= 1
            if remaining[key] == 0:
                del remaining[key]
        quotient.append(b)
    return sorted(quotient)


def _curvatures(g: Graph) -> Counter:
    return Counter(curvature(g, v) for v in range(g.n))


def _curvature_product_matches(g: Graph, a: Graph, b: Graph) -> bool:
    ka, kb = _curvatures(a), _curvatures(b)
    prod: Counter = Counter()
    for x, mx in ka.items():
        for y, my in kb.items():
            prod[x * y] += mx * my
    return prod == _curvatures(g)


@dataclass
class _Profile:
    n: int
    m: int
    omega: int
    closed: list[int]


@lru_cache(maxsize=4096)
def _profile(g: Graph) -> _Profile:
    return _Profile(g.n, g.m, clique_number(g), _closed_degrees(g))


def _quotient_shape(g: Graph, a: Graph) -> tuple[int, int, int, list[int]] | None:
    """(vertices, edges, clique number, closed degrees) a quotient must have."""
    pg, pa = _profile(g), _profile(a)
    if pg.n % pa.n:
        return None
    q = pg.n // pa.n
    num = pg.m - q * pa.m
    den = pa.n + 2 * pa.m
    if num < 0 or num % den:
        return None
    e = num // den
    if pg.omega % pa.omega:
        return None
    closed = _divide_multiset(pg.closed, pa.closed)
    if closed is None:
        return None
    return q, e, pg.omega // pa.omega, closed


def _connected_subsets(g: Graph, root: int, size: int) -> Iterator[int]:
    """Vertex masks of connected induced subgraphs of the given size containing root."""
    adj = g.adj

    def grow(mask: int, frontier: int, banned: int) -> Iterator[int]:
        if mask.bit_count() == size:
            yield mask
            return
        cand = frontier & ~banned
        for v in _bits(cand):
            new_mask = mask | 1 << v
            yield from grow(new_mask, (frontier | adj[v]) & ~new_mask, banned)
            banned |= 1 << v

    yield from grow(1 << root, adj[root], 1 << root)


def _quotient_candidates(g: Graph, shape) -> Iterator[Graph]:
    q, e, omega, closed = shape
    if q <= MAX_CATALOGUE_VERTICES:
        for cert in connected_class_certificates(q):
            b = graph_from_certificate(cert)
            if b.m == e and _closed_degrees(b) == closed and clique_number(b) == omega:
                yield b
        return
    # beyond the catalogue: every fibre {a}×B is an induced copy of B through any vertex
    seen = set()
    for mask in _connected_subsets(g, 0, q):
        b = g.induced(list(_bits(mask)))
        if b.m != e or _closed_degrees(b) != closed:
            continue
        cert = certificate(b)
        if cert in seen:
            continue
        seen.add(cert)
        if clique_number(b) == omega:
            yield b


def divide(g: Graph, a: Graph) -> Graph | None:
    """The graph b with a * b isomorphic to g, if one exists."""
    if not (g.is_connected() and a.is_connected()):
        raise ValueError("division is defined here for connected graphs")
    if a.n == 1:
        return g
    shape = _quotient_shape(g, a)
    if shape is None:
        return None
    target = certificate(g)
    found = None
    for b in _quotient_candidates(g, shape):
        if not _curvature_product_matches(g, a, b):
            continue
        if certificate(strong_product(a, b)) == target:
            if found is not None and certificate(found) != certificate(b):
                raise AssertionError("two non-isomorphic quotients; cancellation violated")
            found = b
    return found


def _sort_key(g: Graph) -> tuple[int, bytes]:
    return (g.n, certificate(g))


def _complete_factors(n: int) -> list[Graph]:
    return [complete(p) for p in _int_factors(n)]


def _smallest_factor(g: Graph) -> tuple[Graph, Graph] | None:
    n = g.n
    omega = _profile(g).omega
    for p in range(2, n + 1):
        if p * p > n:
            break
        if n % p:
            continue
        if p > MAX_CATALOGUE_VERTICES:
            raise FactorSearchOverflow(f"left factors with {p} vertices exceed the catalogue")
        for cert in connected_class_certificates(p):
            a = graph_from_certificate(cert)
            if omega % clique_number(a):
                continue
            b = divide(g, a)
            if b is not None:
                return a, b
    return None


@lru_cache(maxsize=4096)
def _factor_by_certificate(cert: bytes) -> tuple[bytes, ...]:
    g = graph_from_certificate(cert)
    if g.n == 1:
        return ()
    if _is_prime_int(g.n) or _is_prime_int(_profile(g).omega):
        return (cert,)
    if g.m == g.n * (g.n - 1) // 2:
        return tuple(certificate(k) for k in _complete_factors(g.n))
    split = _smallest_factor(g)
    if split is None:
        return (cert,)
    a, b = split
    return (certificate(a),) + _factor_by_certificate(certificate(b))


@dataclass(frozen=True)
class Factorization:
    factors: tuple[Graph, ...]

    def product(self) -> Graph:
        result = complete(1)
        for f in self.factors:
            result = strong_product(result, f)
        return result

    def certificates(self) -> tuple[bytes, ...]:
        return tuple(certificate(f) for f in self.factors)


def factor(g: Graph) -> Factorization:
    """Prime factors of a connected graph, sorted by (vertex count, certificate)."""
    if not g.is_connected():
        raise ValueError("factor expects a connected graph; factor each component instead")
    certs = _factor_by_certificate(certificate(g))
    return Factorization(tuple(sorted((graph_from_certificate(c) for c in certs), key=_sort_key)))


def prime_certificates(g: Graph) -> tuple[bytes, ...]:
    """Sorted prime-factor certificates of a connected graph (empty for K_1)."""
    return tuple(sorted(_factor_by_certificate(certificate(g))))


@dataclass(frozen=True)
class PrimalityCertificate:
    verdict: str  # prime | composite | unknown
    reason: str
    factors: tuple[Graph, ...] = ()
    euler_polynomial_irreducible: bool | None = None
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "factors": [f.to_json() for f in self.factors],
            "euler_polynomial_irreducible": self.euler_polynomial_irreducible,
            "notes": list(self.notes),
        }


def certify(g: Graph) -> PrimalityCertificate:
    if not g.is_connected():
        raise ValueError("certify expects a connected graph")
    if g.n == 1:
        raise ValueError("K_1 is the unit, neither prime nor composite")
    if _is_prime_int(g.n):
        return PrimalityCertificate("prime", "vertex-count-prime")
    omega = _profile(g).omega
    if _is_prime_int(omega):
        return PrimalityCertificate("prime", "clique-number-prime")
    e = euler_polynomial(g)
    irreducible = is_irreducible(e) if e.degree <= MAX_KRONECKER_DEGREE else None
    notes = ()
    if irreducible:
        notes = ("irreducible Euler polynomial noted only: e is multiplicative on the product complex, not the strong product",)
    try:
        fac = factor(g)
    except FactorSearchOverflow as exc:
        return PrimalityCertificate("unknown", "exhaustive-search", (), irreducible, notes + (str(exc),))
    if len(fac.factors) > 1:
        if certificate(fac.product()) != certificate(g):
            raise AssertionError("factor product does not reproduce the input")
        return PrimalityCertificate("composite", "factor-found", fac.factors, irreducible, notes)
    return PrimalityCertificate("prime", "exhaustive-search", (), irreducible, notes)
