from itertools import product

from hypothesis import given, strategies as st

from conftest import connected_graphs, graphs, relabelled, small_graphs
from gnum.canonical import (
    brute_force_certificate,
    brute_force_isomorphic,
    canonical_form,
    certificate,
    graph_from_certificate,
    is_isomorphic,
)
from gnum.graph import (
    EMPTY,
    Graph,
    complement,
    complete,
    components,
    cycle,
    disjoint_union,
    points,
    strong_product,
    zykov_join,
)


def iso(a, b):
    return certificate(a) == certificate(b)


def test_strong_product_examples():
    assert iso(strong_product(complete(2), complete(2)), complete(4))
    assert iso(strong_product(points(2), points(2)), points(4))
    g = cycle(5)
    assert iso(strong_product(g, complete(1)), g)


def test_strong_product_indexing_is_row_major():
    a, b = complete(2), Graph.from_edges(3, [(0, 1)])
    p = strong_product(a, b)
    expected = set()
    for (a1, b1), (a2, b2) in product(product(range(2), range(3)), repeat=2):
        u, v = a1 * 3 + b1, a2 * 3 + b2
        if u < v and (a1 == a2 or a.has_edge(a1, a2)) and (b1 == b2 or b.has_edge(b1, b2)):
            expected.add((u, v))
    assert p.edges == frozenset(expected)


def test_disjoint_union_examples():
    two = disjoint_union(complete(2), complete(2))
    assert (two.n, two.m, len(components(two))) == (4, 2, 2)
    assert disjoint_union(cycle(4), EMPTY) == cycle(4)
    assert iso(disjoint_union(complete(1), complete(1)), points(2))


def test_join_examples():
    assert iso(zykov_join(complete(1), complete(1)), complete(2))
    assert iso(zykov_join(points(2), points(2)), cycle(4))
    assert iso(zykov_join(complete(2), complete(3)), complete(5))


def test_complement_examples():
    assert complement(points(5)) == complete(5)
    g = cycle(5)
    assert complement(complement(g)) == g


def test_components_sorted_by_certificate():
    g = disjoint_union(complete(3), complete(2))
    comps = components(g)
    assert {certificate(c) for c in comps} == {certificate(complete(2)), certificate(complete(3))}
    assert [certificate(c) for c in comps] == sorted(certificate(c) for c in comps)
    assert len(components(cycle(5))) == 1
    assert components(EMPTY) == []


def test_certificate_examples():
    c4 = cycle(4)
    assert certificate(c4.relabel([2, 0, 3, 1])) == certificate(c4)
    assert certificate(complete(3)) == certificate(cycle(3))
    assert certificate(Graph.from_edges(3, [(0, 1), (1, 2)])) != certificate(complete(3))
    assert is_isomorphic(cycle(4), zykov_join(points(2), points(2)))
    assert not is_isomorphic(complete(4), cycle(4))
    assert is_isomorphic(EMPTY, EMPTY)


def test_canonical_form_relabeling_realizes_certificate():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    cf = canonical_form(g)
    assert graph_from_certificate(cf.certificate) == cf.apply(g)


def test_certificate_classes_match_brute_force_oracle():
    # one certificate per class of the brute-force canonical labelling, n <= 5
    for g in small_graphs(5):
        assert graph_from_certificate(certificate(g)).n == g.n
    certs = [certificate(g) for g in small_graphs(5)]
    oracle = [brute_force_certificate(g) for g in small_graphs(5)]
    assert len(set(certs)) == len(set(oracle)) == len(certs)


@given(graphs(max_n=7), st.data())
def test_certificate_is_relabeling_invariant(g, data):
    h = data.draw(relabelled(g))
    assert certificate(g) == certificate(h)


@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_agrees_with_permutation_oracle(a, b):
    assert is_isomorphic(a, b) == brute_force_isomorphic(a, b)


@given(graphs(min_n=6, max_n=7), st.data())
def test_isomorphism_oracle_on_near_misses(g, data):
    # flipping one pair gives a graph with the same vertex count, often the same degree sequence
    if g.n < 2:
        return
    i, j = sorted(data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True)))
    edges = set(g.edges) ^ {(i, j)}
    h = data.draw(relabelled(Graph.from_edges(g.n, edges)))
    assert is_isomorphic(g, h) == brute_force_isomorphic(g, h)


@given(graphs(max_n=4), graphs(max_n=4), graphs(max_n=3))
def test_ring_axioms(a, b, c):
    assert iso(strong_product(a, b), strong_product(b, a))
    assert iso(strong_product(strong_product(a, b), c), strong_product(a, strong_product(b, c)))
    assert iso(strong_product(a, complete(1)), a)
    assert iso(strong_product(a, disjoint_union(b, c)), disjoint_union(strong_product(a, b), strong_product(a, c)))
    assert iso(disjoint_union(a, b), disjoint_union(b, a))


@given(graphs(max_n=5), graphs(max_n=5))
def test_vertex_counts(a, b):
    assert strong_product(a, b).n == a.n * b.n
    assert disjoint_union(a, b).n == a.n + b.n


def test_connected_products_are_connected():
    conn = [g for g in small_graphs(5) if g.is_connected()]
    for a in conn:
        for b in conn:
            if a.n * b.n <= 25:
                assert strong_product(a, b).is_connected()


@given(connected_graphs(max_n=5), connected_graphs(max_n=5))
def test_connected_products_connected_random(a, b):
    assert strong_product(a, b).is_connected()


def test_complement_duality_exhaustive(upto4):
    for a in upto4:
        for b in upto4:
            assert iso(complement(disjoint_union(a, b)), zykov_join(complement(a), complement(b)))
            assert iso(complement(zykov_join(a, b)), disjoint_union(complement(a), complement(b)))


def test_json_round_trip():
    g = cycle(5)
    assert Graph.from_json(g.to_json()) == g
    assert g.to_json() == {"n": 5, "edges": [[0, 1], [0, 4], [1, 2], [2, 3], [3, 4]]}
