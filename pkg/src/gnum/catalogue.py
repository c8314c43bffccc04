"""Isomorphism classes of small graphs, built by one-vertex augmentation.

Every graph on n vertices arises from a graph on n - 1 vertices by adding a
vertex with some neighbourhood, so extending each (n-1)-class in all 2^(n-1)
ways and deduplicating by certificate yields every n-class.  Results can be
cached on disk at the path named by ``GNUM_CATALOG``.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from pathlib import Path

from gnum.canonical import certificate, graph_from_certificate
from gnum.graph import Graph

MAX_CATALOGUE_VERTICES = 7
ENV_VAR = "GNUM_CATALOG"


def _cache_path() -> Path | None:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def _load_cache() -> dict[int, list[bytes]]:
    path = _cache_path()
    if path is None or not path.exists():
        return {}
    try:
        data = json.loads(path.read_text())
        return {int(k): [bytes.fromhex(c) for c in v] for k, v in data.get("classes", {}).items()}
    except (OSError, ValueError, KeyError):
        return {}


def _store_cache(table: dict[int, list[bytes]]) -> None:
    path = _cache_path()
    if path is None:
        return
    payload = {"version": 1, "classes": {str(k): [c.hex() for c in v] for k, v in sorted(table.items())}}
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload))
    except OSError:
        pass


def _augment(prev: list[bytes], n: int) -> list[bytes]:
    found = set()
    for cert in prev:
        base = graph_from_certificate(cert)
        for nbrs in range(1 << (n - 1)):
            masks = list(base.adj) + [nbrs]
            for v in range(n - 1):
                if nbrs >> v & 1:
                    masks[v] |= 1 << (n - 1)
            found.add(certificate(Graph.from_masks(masks)))
    return sorted(found)


@lru_cache(maxsize=None)
def class_certificates(n: int) -> tuple[bytes, ...]:
    """Sorted certificates of all iso-classes on n vertices."""
    if not 0 <= n <= MAX_CATALOGUE_VERTICES:
        raise ValueError(f"catalogue covers 0..{MAX_CATALOGUE_VERTICES} vertices, not {n}")
    if n == 0:
        return (certificate(Graph(0, frozenset())),)
    cached = _load_cache()
    if n in cached:
        return tuple(cached[n])
    result = _augment(list(class_certificates(n - 1)), n)
    cached = _load_cache()
    cached[n] = result
    _store_cache(cached)
    return tuple(result)


def classes(n: int) -> list[Graph]:
    return [graph_from_certificate(c) for c in class_certificates(n)]


@lru_cache(maxsize=None)
def connected_class_certificates(n: int) -> tuple[bytes, ...]:
    return tuple(c for c in class_certificates(n) if graph_from_certificate(c).is_connected())


def connected_classes(n: int) -> list[Graph]:
    return [graph_from_certificate(c) for c in connected_class_certificates(n)]
