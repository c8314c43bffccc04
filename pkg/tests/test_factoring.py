from collections import Counter

import pytest
from hypothesis import given

from conftest import connected_graphs
from gnum.canonical import certificate
from gnum.catalogue import connected_classes
from gnum.factoring import certify, divide, factor, prime_certificates
from gnum.graph import Graph, complete, cycle, disjoint_union, octahedron, path, star, strong_product


def cert_multiset(graphs):
    return Counter(certificate(g) for g in graphs)


def composite_oracle(n):
    """Certificates of every product of two connected classes with n vertices in total."""
    out = {}
    for p in range(2, n):
        if n % p:
            continue
        for a in connected_classes(p):
            for b in connected_classes(n // p):
                out.setdefault(certificate(strong_product(a, b)), (a, b))
    return out


def test_divide_examples():
    assert certificate(divide(complete(4), complete(2))) == certificate(complete(2))
    g = cycle(6)
    assert certificate(divide(g, complete(1))) == certificate(g)
    assert divide(cycle(5), complete(2)) is None
    assert divide(cycle(6), complete(2)) is None
    with pytest.raises(ValueError):
        divide(disjoint_union(complete(2), complete(2)), complete(2))


def test_factor_examples():
    assert cert_multiset(factor(complete(6)).factors) == cert_multiset([complete(2), complete(3)])
    assert cert_multiset(factor(cycle(5)).factors) == cert_multiset([cycle(5)])
    assert cert_multiset(factor(complete(4)).factors) == cert_multiset([complete(2), complete(2)])
    c4 = cycle(4)
    assert cert_multiset(factor(strong_product(c4, c4)).factors) == cert_multiset([c4, c4])
    with pytest.raises(ValueError):
        factor(disjoint_union(complete(1), complete(1)))


def test_factor_order_is_deterministic():
    g = strong_product(complete(3), cycle(4))
    names = [(f.n, certificate(f)) for f in factor(g).factors]
    assert names == sorted(names)


def test_factor_matches_product_oracle_on_small_orders():
    for n in (4, 6):
        oracle = composite_oracle(n)
        for g in connected_classes(n):
            fac = factor(g)
            assert (len(fac.factors) > 1) == (certificate(g) in oracle)
            assert certificate(fac.product()) == certificate(g)


def test_factor_of_products_up_to_twelve_vertices():
    # unique factorization: the primes of a*b are the primes of a together with those of b
    small = [g for n in range(2, 7) for g in connected_classes(n)]
    checked = 0
    for a in small:
        for b in small:
            if a.n * b.n > 12 or a.n > b.n:
                continue
            got = sorted(prime_certificates(strong_product(a, b)))
            assert got == sorted(prime_certificates(a) + prime_certificates(b))
            checked += 1
    assert checked > 100


@given(connected_graphs(min_n=2, max_n=4), connected_graphs(min_n=2, max_n=4))
def test_factor_random_products(a, b):
    p = strong_product(a, b)
    assert sorted(prime_certificates(p)) == sorted(prime_certificates(a) + prime_certificates(b))
    assert certificate(factor(p).product()) == certificate(p)


def test_certify_examples():
    for g in connected_classes(7):
        c = certify(g)
        assert (c.verdict, c.reason) == ("prime", "vertex-count-prime")
    c4 = cycle(4)
    c = certify(strong_product(c4, c4))
    assert c.verdict == "composite" and c.reason == "factor-found"
    assert cert_multiset(c.factors) == cert_multiset([c4, c4])
    with pytest.raises(ValueError):
        certify(complete(1))


def test_certify_clique_number_criterion():
    c = certify(Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
    assert (c.verdict, c.reason) == ("prime", "clique-number-prime")


def test_certify_uses_search_for_hard_cases():
    for g in (cycle(6), octahedron(), path(6), star(6)):
        c = certify(g)
        assert c.verdict == "prime"
    c = certify(strong_product(cycle(4), complete(2)))
    assert c.verdict == "composite"
    assert certificate(strong_product(*c.factors)) == certificate(strong_product(cycle(4), complete(2)))


def test_prime_vertex_count_agrees_with_exhaustive_search():
    for g in connected_classes(5):
        assert certify(g).verdict == "prime"
        assert len(factor(g).factors) == 1
        assert certificate(g) not in composite_oracle(5)


def test_composite_verdicts_reproduce():
    for g in connected_classes(6):
        c = certify(g)
        if c.verdict == "composite":
            assert certificate(strong_product(*c.factors)) == certificate(g)


def test_euler_polynomial_caveat_is_only_a_note():
    c = certify(cycle(6))
    assert c.verdict == "prime"
    assert c.reason in ("exhaustive-search", "clique-number-prime")
    if c.euler_polynomial_irreducible:
        assert c.notes
