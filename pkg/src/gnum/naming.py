"""Short names for familiar graphs and for products of connected primes."""

from __future__ import annotations

from functools import lru_cache

from gnum.canonical import certificate, graph_from_certificate
from gnum.graph import Graph, complete, cycle, octahedron, path, star

Monomial = tuple[bytes, ...]


def cert_vertices(cert: bytes) -> int:
    return int.from_bytes(cert[:4], "big")


def monomial_vertices(mono: Monomial) -> int:
    out = 1
    for c in mono:
        out *= cert_vertices(c)
    return out


@lru_cache(maxsize=None)
def _named(n: int) -> dict[bytes, str]:
    table: dict[bytes, str] = {}

    def put(name: str, g: Graph) -> None:
        table.setdefault(certificate(g), name)

    put(f"K{n}", complete(n))
    if n >= 3:
        put(f"C{n}", cycle(n))
    if n >= 2:
        put(f"L{n}", path(n))
    if n >= 4:
        put(f"S{n}", star(n))
    if n == 6:
        put("Oct", octahedron())
    return table


def certificate_name(cert: bytes) -> str:
    n = cert_vertices(cert)
    name = _named(n).get(cert)
    return name if name else f"G{n}_{cert[4:].hex()[:8] or '0'}"


def graph_name(g: Graph) -> str:
    return certificate_name(certificate(g))


def _is_complete(cert: bytes) -> bool:
    g = graph_from_certificate(cert)
    return g.m == g.n * (g.n - 1) // 2


def monomial_name(mono: Monomial) -> str:
    """Complete primes merge into one K_n; other primes print as powers."""
    if not mono:
        return "K1"
    k = 1
    others: dict[bytes, int] = {}
    for c in mono:
        if _is_complete(c):
            k *= cert_vertices(c)
        else:
            others[c] = others.get(c, 0) + 1
    parts = [f"K{k}"] if k > 1 else []
    for c, e in others.items():
        name = certificate_name(c)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)
