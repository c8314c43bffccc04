import os
import tempfile
import time
from contextlib import contextmanager

import pytest
from hypothesis import settings, strategies as st

os.environ.setdefault("GNUM_CATALOG", os.path.join(tempfile.gettempdir(), "gnum-catalogue.json"))

from gnum.catalogue import classes  # noqa: E402
from gnum.graph import Graph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def small_graphs(max_n):
    """Every iso-class with 1..max_n vertices."""
    return [g for n in range(1, max_n + 1) for g in classes(n)]


@st.composite
def graphs(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=5):
    g = draw(graphs(min_n, max_n).filter(lambda g: g.is_connected()))
    return g


@st.composite
def relabelled(draw, g):
    perm = draw(st.permutations(range(g.n)))
    return g.relabel(list(perm))


@pytest.fixture(scope="session")
def upto4():
    return small_graphs(4)


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Context manager recording one acceptance criterion as PASS or FAIL."""
    results = request.config.stash.setdefault(ACCEPTANCE, [])

    @contextmanager
    def run(number, title):
        start = time.perf_counter()
        passed = False
        try:
            yield
            passed = True
        finally:
            elapsed = time.perf_counter() - start
            results.append((number, title, passed, elapsed))
            print(f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}  ({elapsed:.1f}s)")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, elapsed in sorted(results):
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}  ({elapsed:.1f}s)")
