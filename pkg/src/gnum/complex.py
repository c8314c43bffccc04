"""Whitney complexes, refinements, connection graphs and product chain complexes.

Simplices are sorted vertex tuples.  A complex lists them dimension-major and
lexicographically within a dimension; that order indexes every matrix built
from the complex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from gnum.canonical import is_isomorphic
from gnum.graph import Graph, _bits, strong_product

Simplex = tuple[int, ...]


def iter_cliques(g: Graph) -> Iterator[Simplex]:
    """All nonempty cliques, in lexicographic order."""
    adj = g.adj

    def extend(clique: Simplex, cand: int) -> Iterator[Simplex]:
        for v in _bits(cand):
            grown = clique + (v,)
            yield grown
            yield from extend(grown, cand & adj[v] & ~((2 << v) - 1))

    yield from extend((), (1 << g.n) - 1)


def clique_counts(g: Graph) -> list[int]:
    """f-vector without materialising the simplices."""
    adj = g.adj
    counts: list[int] = []

    def extend(size: int, cand: int) -> None:
        for v in _bits(cand):
            if len(counts) <= size:
                counts.append(0)
            counts[size] += 1
            extend(size + 1, cand & adj[v] & ~((2 << v) - 1))

    extend(0, (1 << g.n) - 1)
    return counts


@dataclass(frozen=True)
class SimplicialComplex:
    simplices: tuple[Simplex, ...]

    @classmethod
    def from_simplices(cls, simplices) -> "SimplicialComplex":
        unique = {tuple(sorted(s)) for s in simplices if len(s)}
        return cls(tuple(sorted(unique, key=lambda s: (len(s), s))))

    @cached_property
    def index(self) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.simplices)}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in s) for s in self.simplices)

    @property
    def dim(self) -> int:
        return len(self.simplices[-1]) - 1 if self.simplices else -1

    def __len__(self) -> int:
        return len(self.simplices)

    def of_dim(self, k: int) -> list[Simplex]:
        return [s for s in self.simplices if len(s) == k + 1]

    @property
    def f_vector(self) -> list[int]:
        f = [0] * (self.dim + 1)
        for s in self.simplices:
            f[len(s) - 1] += 1
        return f

    def is_closed(self) -> bool:
        present = set(self.simplices)
        return all(
            face in present
            for s in self.simplices
            for r in range(1, len(s))
            for face in combinations(s, r)
        )

    @cached_property
    def chain_complex(self) -> "ChainComplex":
        cells = [self.of_dim(k) for k in range(self.dim + 1)]
        return ChainComplex.from_simplicial(cells)

    def connection_matrix(self) -> np.ndarray:
        if not self.masks:
            return np.zeros((0, 0), dtype=np.int64)
        return np.array([[1 if a & b else 0 for b in self.masks] for a in self.masks], dtype=np.int64)

    def to_json(self) -> dict:
        return {"simplices": [list(s) for s in self.simplices]}

    @classmethod
    def from_json(cls, data: dict | str) -> "SimplicialComplex":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_simplices(data["simplices"])


def whitney_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(tuple(sorted(iter_cliques(g), key=len)))


def barycentric_refinement(g: Graph) -> Graph:
    cx = whitney_complex(g)
    index = cx.index
    edges = []
    for s, i in index.items():
        for r in range(1, len(s)):
            for face in combinations(s, r):
                edges.append((index[face], i))
    return Graph.from_edges(len(cx), edges)


def connection_graph(g: Graph) -> Graph:
    masks = whitney_complex(g).masks
    edges = [
        (i, j)
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
        if masks[i] & masks[j]
    ]
    return Graph(len(masks), frozenset(edges))


def stanley_reisner_monomials(g: Graph) -> list[tuple[str, ...]]:
    return [tuple(f"v{v}" for v in s) for s in whitney_complex(g).simplices]


class ChainComplex:
    """Graded cells with integer boundary matrices ``d[k]: C_k -> C_{k-1}``."""

    def __init__(self, cells: list[list], boundaries: list[np.ndarray]):
        self.cells = cells
        self.boundaries = boundaries

    @classmethod
    def from_simplicial(cls, cells: list[list[Simplex]]) -> "ChainComplex":
        bds = [np.zeros((0, len(cells[0]) if cells else 0), dtype=np.int64)]
        for k in range(1, len(cells)):
            lower = {s: i for i, s in enumerate(cells[k - 1])}
            d = np.zeros((len(cells[k - 1]), len(cells[k])), dtype=np.int64)
            for j, s in enumerate(cells[k]):
                for i in range(len(s)):
                    d[lower[s[:i] + s[i + 1:]], j] = (-1) ** i
            bds.append(d)
        return cls(cells, bds)

    @property
    def f_vector(self) -> list[int]:
        return [len(c) for c in self.cells]

    @property
    def top(self) -> int:
        return len(self.cells) - 1

    def boundary(self, k: int) -> np.ndarray:
        """``d_k``; empty matrices outside the graded range."""
        if k < 0 or k > self.top:
            rows = len(self.cells[k - 1]) if 0 <= k - 1 <= self.top else 0
            cols = len(self.cells[k]) if 0 <= k <= self.top else 0
            return np.zeros((rows, cols), dtype=np.int64)
        return self.boundaries[k]

    def tensor(self, other: "ChainComplex") -> "ChainComplex":
        """Tensor product with d(x⊗y) = dx⊗y + (-1)^{dim x} x⊗dy."""
        top = self.top + other.top
        if self.top < 0 or other.top < 0:
            return ChainComplex([], [])
        cells: list[list] = [[] for _ in range(top + 1)]
        for k, xs in enumerate(self.cells):
            for i in range(len(xs)):
                for l, ys in enumerate(other.cells):
                    for j in range(len(ys)):
                        cells[k + l].append((k, i, l, j))
        pos = [{c: p for p, c in enumerate(level)} for level in cells]
        bds = [np.zeros((0, len(cells[0])), dtype=np.int64)]
        for n in range(1, top + 1):
            d = np.zeros((len(cells[n - 1]), len(cells[n])), dtype=np.int64)
            for col, (k, i, l, j) in enumerate(cells[n]):
                if k > 0:
                    dx = self.boundaries[k][:, i]
                    for i2 in np.flatnonzero(dx):
                        d[pos[n - 1][(k - 1, int(i2), l, j)], col] += dx[i2]
                if l > 0:
                    dy = other.boundaries[l][:, j]
                    sign = -1 if k % 2 else 1
                    for j2 in np.flatnonzero(dy):
                        d[pos[n - 1][(k, i, l - 1, int(j2))], col] += sign * dy[j2]
            bds.append(d)
        return ChainComplex(cells, bds)


@dataclass(frozen=True)
class ProductComplexCell:
    left: Simplex
    right: Simplex

    @property
    def dim(self) -> int:
        return len(self.left) + len(self.right) - 2


class ProductComplex:
    """Cells x⊗y of two simplicial complexes, listed pair-lexicographically."""

    def __init__(self, a: SimplicialComplex, b: SimplicialComplex):
        self.a = a
        self.b = b
        self.cells = [ProductComplexCell(x, y) for x in a.simplices for y in b.simplices]

    @property
    def f_vector(self) -> list[int]:
        return self.chain_complex.f_vector

    @cached_property
    def chain_complex(self) -> ChainComplex:
        return self.a.chain_complex.tensor(self.b.chain_complex)

    def graded_cells(self, n: int) -> list[ProductComplexCell]:
        """Cells of dimension ``n`` in chain-complex order."""
        out = []
        for k, i, l, j in self.chain_complex.cells[n]:
            out.append(ProductComplexCell(self.a.of_dim(k)[i], self.b.of_dim(l)[j]))
        return out

    def intersection_matrix(self) -> np.ndarray:
        """Connection matrix built cell by cell: both projections must meet."""
        ma, mb = self.a.masks, self.b.masks
        pairs = [(x, y) for x in ma for y in mb]
        return np.array(
            [[1 if (x1 & x2 and y1 & y2) else 0 for x2, y2 in pairs] for x1, y1 in pairs],
            dtype=np.int64,
        )

    connection_matrix = intersection_matrix

    def intersection_graph(self) -> Graph:
        ma, mb = self.a.masks, self.b.masks
        pairs = [(x, y) for x in ma for y in mb]
        edges = [
            (i, j)
            for i in range(len(pairs))
            for j in range(i + 1, len(pairs))
            if pairs[i][0] & pairs[j][0] and pairs[i][1] & pairs[j][1]
        ]
        return Graph(len(pairs), frozenset(edges))


def product_complex(a: SimplicialComplex, b: SimplicialComplex) -> ProductComplex:
    return ProductComplex(a, b)


def shannon_connection_identity_check(a: Graph, b: Graph) -> bool:
    lhs = strong_product(connection_graph(a), connection_graph(b))
    rhs = product_complex(whitney_complex(a), whitney_complex(b)).intersection_graph()
    return is_isomorphic(lhs, rhs)


def convolve(f: Sequence[int], g: Sequence[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return out
