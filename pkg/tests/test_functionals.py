import math
import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from conftest import graphs, small_graphs
from gnum.complex import convolve, product_complex, whitney_complex
from gnum.functionals import (
    SizeOverflow,
    clique_number,
    curvature,
    curvature_as_index_expectation,
    euler_characteristic,
    euler_polynomial,
    f_vector,
    independence_number,
    kalai_number,
    multiplicativity_audit,
    poincare_hopf_index,
    shannon_capacity_lower_bound,
    wu_characteristic,
    wu_characteristic_brute,
)
from gnum.graph import EMPTY, Graph, complete, cycle, octahedron, points, power, strong_product
from gnum.polynomial import IntPolynomial, UnsupportedDegree, is_irreducible


def brute_alpha(g):
    for r in range(g.n, 0, -1):
        for s in combinations(range(g.n), r):
            if not any(g.has_edge(i, j) for i, j in combinations(s, 2)):
                return r
    return 0


def test_f_vector_examples():
    assert f_vector(complete(4)) == [4, 6, 4, 1]
    assert f_vector(cycle(4)) == [4, 4]
    assert f_vector(EMPTY) == []


def test_euler_characteristic_examples():
    for n in range(1, 7):
        assert euler_characteristic(complete(n)) == 1
    assert euler_characteristic(cycle(4)) == 0
    assert f_vector(octahedron()) == [6, 12, 8]
    assert euler_characteristic(octahedron()) == 2


def test_euler_polynomial_examples():
    assert euler_polynomial(complete(2)) == IntPolynomial([2, 1])
    assert euler_polynomial(cycle(4)) == IntPolynomial([4, 4])
    a, b = whitney_complex(cycle(4)), whitney_complex(complete(3))
    assert IntPolynomial(product_complex(a, b).f_vector) == euler_polynomial(cycle(4)) * euler_polynomial(complete(3))


def test_irreducibility_examples():
    assert is_irreducible(IntPolynomial([2, 1]))
    assert is_irreducible(IntPolynomial([4, 4]))
    assert not is_irreducible(IntPolynomial([6, 5, 1]))
    with pytest.raises(UnsupportedDegree):
        is_irreducible(IntPolynomial([1] * 14))


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=4), st.lists(st.integers(-5, 5), min_size=2, max_size=4))
def test_products_of_nonconstant_polynomials_are_reducible(p, q):
    a, b = IntPolynomial(p), IntPolynomial(q)
    if a.degree < 1 or b.degree < 1:
        return
    assert not is_irreducible(a * b)


def test_wu_examples():
    assert wu_characteristic(complete(1), 2) == 1
    assert wu_characteristic(complete(2), 2) == -1
    for g in (cycle(4), octahedron(), complete(3)):
        assert wu_characteristic(g, 1) == euler_characteristic(g)


@given(graphs(max_n=6))
def test_wu_two_matches_pair_enumeration(g):
    assert wu_characteristic(g, 2) == wu_characteristic_brute(g, 2)


@given(graphs(max_n=4))
def test_wu_three_matches_definition(g):
    assert wu_characteristic(g, 3) == wu_characteristic_brute(g, 3)


def test_clique_number_examples():
    assert clique_number(complete(4)) == 4
    assert clique_number(cycle(4)) == 2
    assert clique_number(strong_product(complete(2), cycle(4))) == 4


@given(graphs(max_n=7))
def test_clique_number_matches_largest_simplex(g):
    assert clique_number(g) == len(f_vector(g))


def test_independence_examples():
    assert independence_number(cycle(5)) == 2
    assert independence_number(points(6)) == 6
    assert independence_number(strong_product(cycle(5), cycle(5))) == 5


@given(graphs(max_n=9))
def test_independence_matches_subset_search(g):
    assert independence_number(g) == brute_alpha(g)


def test_capacity_examples():
    assert shannon_capacity_lower_bound(cycle(5), 1) == 2
    assert abs(shannon_capacity_lower_bound(cycle(5), 2) - math.sqrt(5)) < 1e-12
    for n in (1, 2, 3):
        assert shannon_capacity_lower_bound(complete(3), n) == pytest.approx(1.0)
    with pytest.raises(SizeOverflow):
        shannon_capacity_lower_bound(cycle(5), 3)


def test_curvature_examples():
    for n in range(4, 8):
        assert all(curvature(cycle(n), v) == 0 for v in range(n))
    assert curvature(complete(3), 0) == Fraction(1, 3)
    assert curvature(points(1), 0) == 1


def test_index_examples():
    k3 = complete(3)
    assert poincare_hopf_index(cycle(5), 0, [0, 1, 2, 3, 4]) == 1
    assert poincare_hopf_index(k3, 2, [0, 1, 2]) == 0
    assert curvature_as_index_expectation(k3, 0) == Fraction(1, 3)
    assert curvature_as_index_expectation(cycle(4), 0) == 0
    assert curvature_as_index_expectation(points(1), 0) == 1


def test_gauss_bonnet_exhaustive():
    for g in small_graphs(6):
        assert sum((curvature(g, v) for v in range(g.n)), Fraction(0)) == euler_characteristic(g)


@given(graphs(min_n=7, max_n=10))
def test_gauss_bonnet_random(g):
    assert sum((curvature(g, v) for v in range(g.n)), Fraction(0)) == euler_characteristic(g)


def test_poincare_hopf_random_orders():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 7)
        g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        order = list(range(n))
        rng.shuffle(order)
        assert sum(poincare_hopf_index(g, v, order) for v in range(n)) == euler_characteristic(g)


def test_index_expectation_equals_curvature_exhaustive():
    for g in small_graphs(5):
        for v in range(g.n):
            assert curvature_as_index_expectation(g, v) == curvature(g, v)


def test_index_expectation_matches_average_over_all_orders():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    orders = list(permutations(range(4)))
    for v in range(4):
        mean = Fraction(sum(poincare_hopf_index(g, v, o) for o in orders), len(orders))
        assert mean == curvature(g, v)


def test_curvature_product_law(upto4):
    for a in upto4:
        for b in upto4:
            p = strong_product(a, b)
            for v in range(a.n):
                for w in range(b.n):
                    assert curvature(p, v * b.n + w) == curvature(a, v) * curvature(b, w)


def test_kalai_number_not_multiplicative_for_strong_product():
    assert kalai_number(complete(2)) == 3
    assert kalai_number(complete(4)) == 15


def _audit(upto4):
    return {(r["functional"], r["product_kind"]): r for r in multiplicativity_audit(upto4)}


def test_multiplicativity_audit(upto4):
    rep = _audit(upto4)
    pairs = len(upto4) * (len(upto4) + 1) // 2
    assert all(r["pairs_checked"] == pairs for r in rep.values())
    for key in [
        ("vertex_count", "strong"),
        ("clique_number", "strong"),
        ("euler_characteristic", "strong"),
        ("euler_characteristic", "product_complex"),
        ("f_vector", "product_complex"),
        ("kalai_number", "product_complex"),
    ]:
        assert rep[key]["violations"] == [], key
    assert rep[("f_vector", "strong")]["violations"]
    assert rep[("kalai_number", "strong")]["violations"]


def test_audit_reports_json_shape(upto4):
    for r in multiplicativity_audit(upto4[:4]):
        assert set(r) == {"functional", "product_kind", "pairs_checked", "violations"}


@given(graphs(max_n=4), graphs(max_n=3))
def test_euler_polynomial_multiplicative_on_product_complex(a, b):
    pc = product_complex(whitney_complex(a), whitney_complex(b))
    assert pc.f_vector == convolve(f_vector(a), f_vector(b))


def test_alpha_of_powers():
    assert independence_number(power(cycle(5), 2)) == 5
