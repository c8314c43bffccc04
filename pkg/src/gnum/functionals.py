"""Valuations and multiplicative functionals on graphs.

f-vectors, Euler characteristic and polynomial, Wu characteristics, clique and
independence numbers, Levitt curvature and Poincaré-Hopf indices, plus an
audit that tabulates which of them are multiplicative under which product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Sequence

from gnum.complex import (
    ProductComplex,
    clique_counts,
    convolve,
    iter_cliques,
    product_complex,
    whitney_complex,
)
from gnum.graph import Graph, _bits, power, strong_product
from gnum.polynomial import IntPolynomial

MAX_ALPHA_VERTICES = 64


class SizeOverflow(ValueError):
    """Input beyond the desk-scale limits of an exact search."""


def f_vector(g: Graph) -> list[int]:
    return clique_counts(g)


def euler_characteristic(g: Graph) -> int:
    return sum((-1) ** k * f for k, f in enumerate(f_vector(g)))


def euler_polynomial(g: Graph) -> IntPolynomial:
    return IntPolynomial(f_vector(g))


def kalai_number(g: Graph) -> int:
    """Total number of simplices."""
    return sum(f_vector(g))


def _chi_of_mask(adj: Sequence[int]) -> Callable[[int], int]:
    """Memoised Euler characteristic of induced subgraphs given by vertex masks."""

    @lru_cache(maxsize=None)
    def chi(mask: int) -> int:
        if not mask:
            return 0
        v = mask.bit_length() - 1
        rest = mask & ~(1 << v)
        return chi(rest) + 1 - chi(adj[v] & rest)

    return chi


def wu_characteristic(g: Graph, k: int = 2) -> int:
    """Signed count of k-tuples of pairwise intersecting simplices."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return euler_characteristic(g)
    if k == 2:
        # indicator[x∩y ≠ ∅] = Σ_{∅≠z⊆x∩y} (-1)^{|z|+1}, and the simplices
        # containing z contribute ω(z)(1 - χ(common neighbourhood of z))
        chi = _chi_of_mask(g.adj)
        total = 0
        full = (1 << g.n) - 1
        for z in iter_cliques(g):
            link = full
            for v in z:
                link &= g.adj[v]
            s = 1 - chi(link)
            total += (-1) ** (len(z) - 1) * s * s
        return total
    return wu_characteristic_brute(g, k)


def wu_characteristic_brute(g: Graph, k: int) -> int:
    simplices = list(iter_cliques(g))
    masks = [sum(1 << v for v in s) for s in simplices]
    signs = [(-1) ** (len(s) - 1) for s in simplices]
    total = 0

    def extend(chosen: list[int], sign: int) -> None:
        nonlocal total
        if len(chosen) == k:
            total += sign
            return
        for i, m in enumerate(masks):
            if all(m & masks[j] for j in chosen):
                extend(chosen + [i], sign * signs[i])

    extend([], 1)
    return total


def _max_clique(adj: Sequence[int], cand: int) -> int:
    """Size of a maximum clique inside ``cand`` (greedy-colouring bound)."""
    best = 0

    def colour_order(p: int) -> list[tuple[int, int]]:
        order = []
        colour = 0
        uncoloured = p
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                order.append((v, colour))
        return order

    def expand(size: int, p: int) -> None:
        nonlocal best
        order = colour_order(p)
        for v, colour in reversed(order):
            if size + colour <= best:
                return
            np_ = p & adj[v]
            if np_:
                expand(size + 1, np_)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    if cand:
        expand(0, cand)
    return best


def clique_number(g: Graph) -> int:
    return _max_clique(g.adj, (1 << g.n) - 1)


def independence_number(g: Graph) -> int:
    if g.n > MAX_ALPHA_VERTICES:
        raise SizeOverflow(f"{g.n} vertices exceed the independence search limit {MAX_ALPHA_VERTICES}")
    full = (1 << g.n) - 1
    co_adj = [full & ~m & ~(1 << v) for v, m in enumerate(g.adj)]
    return _max_clique(co_adj, full)


def shannon_capacity_lower_bound(g: Graph, n: int) -> float:
    """α(gⁿ)^(1/n) for the n-th strong power."""
    if n < 1:
        raise ValueError("n must be positive")
    if g.n**n > MAX_ALPHA_VERTICES:
        raise SizeOverflow(f"{g.n}^{n} vertices exceed the independence search limit")
    return independence_number(power(g, n)) ** (1.0 / n)


def curvature(g: Graph, v: int) -> Fraction:
    """Levitt curvature 1 - V0/2 + V1/3 - ... from the unit sphere of v."""
    link = g.induced(g.neighbors(v))
    k = Fraction(1)
    for dim, count in enumerate(f_vector(link)):
        k += Fraction((-1) ** (dim + 1) * count, dim + 2)
    return k


def poincare_hopf_index(g: Graph, v: int, order: Sequence[int]) -> int:
    """1 - χ of the part of the unit sphere ranked below v."""
    below = [w for w in g.neighbors(v) if order[w] < order[v]]
    return 1 - euler_characteristic(g.induced(below))


def curvature_as_index_expectation(g: Graph, v: int) -> Fraction:
    """Mean index over uniformly random rankings, summed exactly over below-sets.

    Given j lower neighbours (probability 1/(d+1) each), the lower set is a
    uniform j-subset of the d neighbours.
    """
    nbrs = g.neighbors(v)
    d = len(nbrs)
    chi = _chi_of_mask(g.adj)
    total = Fraction(0)
    for j in range(d + 1):
        acc = 0
        for subset in combinations(nbrs, j):
            mask = 0
            for u in subset:
                mask |= 1 << u
            acc += 1 - chi(mask)
        total += Fraction(acc, (d + 1) * comb(d, j))
    return total


# ---------------------------------------------------------------------------
# multiplicativity audit


def _complex_cells(pc: ProductComplex) -> list[tuple[int, int, int]]:
    """(dimension, left mask, right mask) for every product cell."""
    return [
        (c.dim, sum(1 << v for v in c.left), sum(1 << v for v in c.right))
        for c in pc.cells
    ]


def product_complex_wu(pc: ProductComplex, k: int = 2) -> int:
    cells = _complex_cells(pc)
    total = 0

    def extend(chosen: list[int], sign: int) -> None:
        nonlocal total
        if len(chosen) == k:
            total += sign
            return
        for i, (dim, lm, rm) in enumerate(cells):
            if all(lm & cells[j][1] and rm & cells[j][2] for j in chosen):
                extend(chosen + [i], sign * (-1) ** dim)

    extend([], 1)
    return total


STRONG_FUNCTIONALS: dict[str, Callable[[Graph], object]] = {
    "vertex_count": lambda g: g.n,
    "clique_number": clique_number,
    "euler_characteristic": euler_characteristic,
    "wu_2": lambda g: wu_characteristic(g, 2),
    "kalai_number": kalai_number,
    "f_vector": f_vector,
}


def _complex_functionals(pc: ProductComplex) -> dict[str, object]:
    f = pc.f_vector
    return {
        "vertex_count": f[0] if f else 0,
        "clique_number": len(f),  # top cell dimension + 1
        "euler_characteristic": sum((-1) ** k * x for k, x in enumerate(f)),
        "wu_2": product_complex_wu(pc, 2),
        "kalai_number": sum(f),
        "f_vector": f,
    }


def _expected(name: str, va, vb):
    if name == "f_vector":
        return convolve(va, vb)
    return va * vb


def multiplicativity_audit(graphs: Sequence[Graph]) -> list[dict]:
    """Compare φ(product) with φ(a)·φ(b) over all unordered pairs.

    For the f-vector the comparison is against the convolution, which is the
    Euler-polynomial product.
    """
    pairs = [(a, b) for i, a in enumerate(graphs) for b in graphs[i:]]
    single = {
        id(g): {name: fn(g) for name, fn in STRONG_FUNCTIONALS.items()} for g in graphs
    }
    reports = {
        (name, kind): {"functional": name, "product_kind": kind, "pairs_checked": 0, "violations": []}
        for name in STRONG_FUNCTIONALS
        for kind in ("strong", "product_complex")
    }
    for a, b in pairs:
        sp = strong_product(a, b)
        strong_vals = {name: fn(sp) for name, fn in STRONG_FUNCTIONALS.items()}
        cx_vals = _complex_functionals(product_complex(whitney_complex(a), whitney_complex(b)))
        for kind, vals in (("strong", strong_vals), ("product_complex", cx_vals)):
            for name, value in vals.items():
                rep = reports[(name, kind)]
                rep["pairs_checked"] += 1
                expected = _expected(name, single[id(a)][name], single[id(b)][name])
                if value != expected:
                    rep["violations"].append(
                        {"a": a.to_json(), "b": b.to_json(), "value": value, "expected": expected}
                    )
    return list(reports.values())
