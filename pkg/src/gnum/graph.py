"""Finite simple graphs and the constructions the graph rings are built from.

Graphs are immutable values on vertices ``0..n-1``.  Products use row-major
indexing: the pair ``(i, j)`` with ``i`` in the left factor becomes vertex
``i * b.n + j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            i, j = e
            if not (0 <= i < j < self.n):
                raise ValueError(f"bad edge {e} for a graph on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]] = ()) -> "Graph":
        normalized = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            normalized.add((min(i, j), max(i, j)))
        return cls(n, frozenset(normalized))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = list(masks)
        edges = [(i, j) for i, m in enumerate(masks) for j in _bits(m) if j > i]
        return cls(len(masks), frozenset(edges))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask per vertex."""
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled to ``0..k-1`` in the given order."""
        vs = list(vertices)
        index = {v: k for k, v in enumerate(vs)}
        edges = [
            (index[a], index[b])
            for a, b in combinations(vs, 2)
            if self.adj[a] >> b & 1
        ]
        return Graph.from_edges(len(vs), edges)

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def is_connected(self) -> bool:
        return self.n > 0 and len(_component_masks(self)) == 1

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


EMPTY = Graph(0, frozenset())


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def points(n: int) -> Graph:
    """P_n: n isolated vertices, the rational integer n."""
    return Graph(n, frozenset())


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """L_n: the linear graph on n vertices."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """S_n: one centre joined to n - 1 leaves (n vertices in total)."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def octahedron() -> Graph:
    return complement(Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)]))


def strong_product(a: Graph, b: Graph) -> Graph:
    nb = b.n
    closed_a = [a.adj[i] | 1 << i for i in range(a.n)]
    closed_b = [b.adj[j] | 1 << j for j in range(nb)]
    edges = []
    for i1 in range(a.n):
        for i2 in _bits(closed_a[i1]):
            if i2 < i1:
                continue
            for j1 in range(nb):
                u = i1 * nb + j1
                for j2 in _bits(closed_b[j1]):
                    v = i2 * nb + j2
                    if v > u:
                        edges.append((u, v))
    return Graph(a.n * nb, frozenset(edges))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.n
    edges = set(a.edges)
    edges.update((i + shift, j + shift) for i, j in b.edges)
    return Graph(a.n + b.n, frozenset(edges))


def zykov_join(a: Graph, b: Graph) -> Graph:
    union = disjoint_union(a, b)
    cross = [(i, a.n + j) for i in range(a.n) for j in range(b.n)]
    return Graph(union.n, union.edges | frozenset(cross))


def complement(g: Graph) -> Graph:
    edges = [(i, j) for i, j in combinations(range(g.n), 2) if not g.adj[i] >> j & 1]
    return Graph(g.n, frozenset(edges))


def _component_masks(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def component_vertex_sets(g: Graph) -> list[list[int]]:
    return [list(_bits(m)) for m in _component_masks(g)]


def components(g: Graph) -> list[Graph]:
    """Connected components, ordered by canonical certificate."""
    from gnum.canonical import certificate

    parts = [g.induced(vs) for vs in component_vertex_sets(g)]
    return sorted(parts, key=certificate)


def power(g: Graph, k: int) -> Graph:
    if k < 0:
        raise ValueError("negative graph powers live in the rationals")
    result = complete(1)
    for _ in range(k):
        result = strong_product(result, g)
    return result


def sum_graphs(graphs: Iterable[Graph]) -> Graph:
    result = EMPTY
    for g in graphs:
        result = disjoint_union(result, g)
    return result
