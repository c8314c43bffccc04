"""Canonical labelling of small graphs.

Colour refinement plus individualisation, searching the whole refinement tree
for the lexicographically smallest relabelled adjacency.  Automorphisms found
along the way (and the transpositions of twin vertices, which are always
automorphisms) prune sibling subtrees.  Disconnected graphs are labelled one
component at a time with components in certificate order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from gnum.graph import Graph, _bits, component_vertex_sets


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    relabeling: tuple[int, ...]  # vertex v -> canonical label

    def apply(self, g: Graph) -> Graph:
        return g.relabel(self.relabeling)


def encode(n: int, rows: list[int] | tuple[int, ...]) -> bytes:
    """Pack ``n`` and the upper triangle of the adjacency (row-major)."""
    acc = 0
    nbits = 0
    for i in range(n):
        upper = rows[i] >> (i + 1)
        width = n - i - 1
        # reverse into row-major bit order: column i+1 first
        for j in range(width):
            acc = acc << 1 | (upper >> j & 1)
        nbits += width
    pad = (-nbits) % 8
    acc <<= pad
    return n.to_bytes(4, "big") + acc.to_bytes((nbits + pad) // 8, "big")


def decode(cert: bytes) -> Graph:
    n = int.from_bytes(cert[:4], "big")
    nbits = n * (n - 1) // 2
    payload = int.from_bytes(cert[4:], "big") if len(cert) > 4 else 0
    payload >>= (-nbits) % 8
    edges = []
    pos = nbits
    for i in range(n):
        for j in range(i + 1, n):
            pos -= 1
            if payload >> pos & 1:
                edges.append((i, j))
    return Graph(n, frozenset(edges))


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Equitable refinement; cell order is preserved and stays label-invariant."""
    ncells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nb]))) for v, nb in enumerate(nbrs)]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncells:
            return new
        ncells = len(ranks)
        colors = new


def _individualize(nbrs: list[list[int]], colors: list[int], v: int) -> list[int]:
    shifted = [2 * c + 1 for c in colors]
    shifted[v] -= 1
    return _refine(nbrs, shifted)


def _split_twin_cell(colors: list[int], cell: list[int]) -> list[int]:
    """Individualize every vertex of a cell of mutual twins, in vertex order.

    Refinement cannot split anything else afterwards, so this is the path the
    search would take anyway once twin transpositions prune the siblings.
    """
    k = len(cell)
    target = colors[cell[0]]
    out = [c if c < target else c + k - 1 for c in colors]
    for i, v in enumerate(cell):
        out[v] = target + i
    return out


def _is_twin_class(adj: list[int], cell: list[int]) -> bool:
    first = cell[0]
    return all(adj[v] == adj[first] for v in cell) or all(
        adj[v] | 1 << v == adj[first] | 1 << first for v in cell
    )


def _twin_transpositions(adj: list[int]) -> list[list[int]]:
    n = len(adj)
    gens = []
    for key in (lambda v: adj[v], lambda v: adj[v] | 1 << v):
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(key(v), []).append(v)
        for members in groups.values():
            for u, w in zip(members, members[1:]):
                perm = list(range(n))
                perm[u], perm[w] = w, u
                gens.append(perm)
    return gens


def _orbit_roots(gens: list[list[int]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for x in range(n):
            rx, ry = find(x), find(perm[x])
            if rx != ry:
                parent[rx] = ry
    return [find(x) for x in range(n)]


def _canonical_connected(adj: list[int]) -> tuple[tuple[int, ...], list[int]]:
    """Smallest relabelled row tuple and a labelling attaining it."""
    n = len(adj)
    nbrs = [list(_bits(a)) for a in adj]
    autos = _twin_transpositions(adj)
    best: list = [None, None]

    def leaf(labels: list[int]) -> None:
        inv = [0] * n
        for v, lab in enumerate(labels):
            inv[lab] = v
        rows = []
        for lab in range(n):
            mask = 0
            for u in _bits(adj[inv[lab]]):
                mask |= 1 << labels[u]
            rows.append(mask)
        code = tuple(rows)
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, labels
        elif code == best[0]:
            best_inv = [0] * n
            for v, lab in enumerate(best[1]):
                best_inv[lab] = v
            autos.append([best_inv[labels[v]] for v in range(n)])

    def visit(colors: list[int], fixed: list[int]) -> None:
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            leaf(colors)
            return
        cell = [v for v in range(n) if colors[v] == target]
        if _is_twin_class(adj, cell):
            visit(_split_twin_cell(colors, cell), fixed + cell[:-1])
            return
        explored: list[int] = []
        explored_roots: set[int] = set()
        seen_autos = -1
        roots = list(range(n))
        for w in cell:
            if explored_roots:
                if len(autos) != seen_autos:
                    seen_autos = len(autos)
                    stab = [p for p in autos if all(p[f] == f for f in fixed)]
                    roots = _orbit_roots(stab, n)
                    explored_roots = {roots[e] for e in explored}
                if roots[w] in explored_roots:
                    continue
            explored.append(w)
            explored_roots.add(roots[w])
            visit(_individualize(nbrs, colors, w), fixed + [w])

    visit(_refine(nbrs, [0] * n), [])
    return best[0], best[1]


@lru_cache(maxsize=200_000)
def canonical_form(g: Graph) -> CanonicalForm:
    parts = []
    for vs in component_vertex_sets(g):
        sub = g.induced(vs)
        code, labels = _canonical_connected(list(sub.adj))
        parts.append((encode(len(vs), code), vs, labels))
    parts.sort(key=lambda p: p[0])
    relabel = [0] * g.n
    offset = 0
    for _, vs, labels in parts:
        for local, v in enumerate(vs):
            relabel[v] = offset + labels[local]
        offset += len(vs)
    rows = [0] * g.n
    for i, j in g.edges:
        a, b = relabel[i], relabel[j]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return CanonicalForm(encode(g.n, rows), tuple(relabel))


def certificate(g: Graph) -> bytes:
    return canonical_form(g).certificate


def canonical_graph(g: Graph) -> Graph:
    return decode(certificate(g))


@lru_cache(maxsize=200_000)
def graph_from_certificate(cert: bytes) -> Graph:
    return decode(cert)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return certificate(a) == certificate(b)


def brute_force_certificate(g: Graph) -> bytes:
    """Minimum encoding over all n! relabellings (oracle for small n)."""
    best = None
    for perm in permutations(range(g.n)):
        rows = [0] * g.n
        for i, j in g.edges:
            rows[perm[i]] |= 1 << perm[j]
            rows[perm[j]] |= 1 << perm[i]
        code = encode(g.n, rows)
        if best is None or code < best:
            best = code
    return best if best is not None else encode(0, [])


def brute_force_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    target = b.edges
    for perm in permutations(range(a.n)):
        if all((min(perm[i], perm[j]), max(perm[i], perm[j])) in target for i, j in a.edges):
            return True
    return False
