"""The thirteen acceptance criteria, one test each, at their stated tolerances.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL lines as
they happen; they are also repeated in the terminal summary.
"""

import math
import random
import time
from fractions import Fraction
from itertools import combinations_with_replacement, product

import numpy as np

from conftest import small_graphs
from gnum.arithmetic.calculus import EXP, GEOM, cos_plus_i_sin, exp_i_t, functional_pushforward, series_eval
from gnum.arithmetic.integers import gi
from gnum.arithmetic.wiener import we_from_laurent, we_invert
from gnum.canonical import certificate
from gnum.catalogue import connected_classes
from gnum.complex import connection_graph, product_complex, whitney_complex
from gnum.factoring import factor, prime_certificates
from gnum.functionals import (
    curvature,
    curvature_as_index_expectation,
    euler_characteristic,
    independence_number,
    shannon_capacity_lower_bound,
)
from gnum.graph import (
    complement,
    complete,
    cycle,
    disjoint_union,
    octahedron,
    path,
    points,
    star,
    strong_product,
    zykov_join,
)
from gnum.polynomial import IntPolynomial
from gnum.primes import goldbach_landau_checks, non_ufd_witness, composite_share_bound, progression_scan, sieve
from gnum.spectra import connection_spectrum, poincare_polynomial, spectral_zeta

W = whitney_complex
K2 = complete(2)


def cert_multiset(graphs):
    return sorted(certificate(g) for g in graphs)


def test_criterion_01_ring_axioms(criterion):
    basis = [
        complete(1),
        K2,
        points(2),
        complete(3),
        path(3),
        points(3),
        disjoint_union(complete(1), K2),
        cycle(4),
        complete(4),
        path(4),
        star(4),
        disjoint_union(K2, K2),
    ]
    mul, add = strong_product, disjoint_union
    with criterion(1, "ring axioms on a 12-graph basis"):
        start = time.perf_counter()
        assert len(basis) == 12 and len({certificate(g) for g in basis}) == 12
        for a, b in product(basis, repeat=2):
            assert certificate(mul(a, b)) == certificate(mul(b, a))
            assert certificate(add(a, b)) == certificate(add(b, a))
        for a, b, c in product(basis, repeat=3):
            assert certificate(mul(mul(a, b), c)) == certificate(mul(a, mul(b, c)))
            assert certificate(add(add(a, b), c)) == certificate(add(a, add(b, c)))
            assert certificate(mul(a, add(b, c))) == certificate(add(mul(a, b), mul(a, c)))
        assert time.perf_counter() - start < 60


def test_criterion_02_duality(criterion):
    graphs = small_graphs(4)
    with criterion(2, "complement of a sum is the join of complements"):
        for a, b in product(graphs, repeat=2):
            lhs = complement(disjoint_union(a, b))
            rhs = zykov_join(complement(a), complement(b))
            assert certificate(lhs) == certificate(rhs)


KUNNETH_PAIRS = [
    (cycle(4), cycle(4)),
    (cycle(4), octahedron()),
    (cycle(5), cycle(6)),
    (cycle(6), octahedron()),
    (octahedron(), octahedron()),
    (complete(3), octahedron()),
    (complete(4), cycle(5)),
    (K2, cycle(4)),
    (K2, octahedron()),
    (complete(1), cycle(6)),
    (complete(3), complete(4)),
    (star(4), cycle(4)),
    (star(5), octahedron()),
    (star(4), star(5)),
    (cycle(5), cycle(5)),
    (cycle(4), cycle(6)),
    (complete(5), cycle(4)),
    (cycle(5), octahedron()),
    (star(6), cycle(5)),
    (complete(2), complete(3)),
]


def test_criterion_03_kunneth(criterion):
    with criterion(3, "Künneth formula for product complexes"):
        start = time.perf_counter()
        assert len(KUNNETH_PAIRS) == 20
        for a, b in KUNNETH_PAIRS:
            lhs = poincare_polynomial(product_complex(W(a), W(b)))
            assert lhs == poincare_polynomial(a) * poincare_polynomial(b)
        assert poincare_polynomial(product_complex(W(cycle(4)), W(cycle(4)))) == IntPolynomial([1, 2, 1])
        assert time.perf_counter() - start < 300


def test_criterion_04_tensor_spectra(criterion):
    graphs = small_graphs(4)
    with criterion(4, "product spectra and zeta multiplicativity"):
        worst = 0.0
        for a, b in product(graphs, repeat=2):
            ea, eb = connection_spectrum(W(a)), connection_spectrum(W(b))
            pc = product_complex(W(a), W(b))
            ep = connection_spectrum(pc)
            expected = np.sort(np.outer(ea, eb).ravel())
            assert ep.shape == expected.shape
            worst = max(worst, float(np.max(np.abs(ep - expected))))
            for s in (1, 2, 1 + 1j):
                assert abs(spectral_zeta(pc, s) - spectral_zeta(a, s) * spectral_zeta(b, s)) <= 1e-8
        assert worst <= 1e-8


def test_criterion_05_connection_identity(criterion):
    pairs = [
        (complete(1), complete(1)),
        (K2, K2),
        (K2, complete(3)),
        (cycle(4), K2),
        (path(3), path(3)),
        (star(4), K2),
        (complete(3), complete(3)),
        (cycle(4), path(3)),
        (points(2), K2),
        (cycle(5), complete(1)),
    ]
    with criterion(5, "connection graph of a product"):
        for a, b in pairs:
            lhs = strong_product(connection_graph(a), connection_graph(b))
            rhs = product_complex(W(a), W(b)).intersection_graph()
            assert certificate(lhs) == certificate(rhs)


def test_criterion_06_gauss_bonnet_poincare_hopf(criterion):
    with criterion(6, "Gauss-Bonnet, index expectation, curvature product"):
        for g in small_graphs(6):
            assert sum((curvature(g, v) for v in range(g.n)), Fraction(0)) == euler_characteristic(g)
        for g in small_graphs(5):
            for v in range(g.n):
                assert curvature_as_index_expectation(g, v) == curvature(g, v)
        graphs = small_graphs(4)
        for a, b in product(graphs, repeat=2):
            p = strong_product(a, b)
            for v, w in product(range(a.n), range(b.n)):
                assert curvature(p, v * b.n + w) == curvature(a, v) * curvature(b, w)


def test_criterion_07_norm(criterion):
    connected = [g for g in small_graphs(4) if g.is_connected()]
    rng = random.Random(2024)

    def element():
        return sum((gi(rng.choice(connected)) * rng.randint(-3, 3) for _ in range(rng.randint(1, 4))), gi(0))

    with criterion(7, "Banach inequality and the edgeless absolute value"):
        strict = 0
        for _ in range(500):
            x, y = element(), element()
            assert (x * y).norm() <= x.norm() * y.norm()
            strict += (x * y).norm() < x.norm() * y.norm()
        assert strict >= 1
        x, y = gi(K2) - gi(points(2)), gi(K2) + gi(points(2))
        assert (x * y).norm() == 8 and x.norm() * y.norm() == 16
        def edgeless(k):
            return gi(points(abs(k))) * (1 if k >= 0 else -1) if k else gi(0)

        for a, b in product(range(-12, 13), repeat=2):
            x, y = edgeless(a), edgeless(b)
            assert x.norm() == abs(a)
            assert (x * y).norm() == abs(a * b) and x * y == edgeless(a * b)
            assert (x + y).norm() == abs(a + b) and (x - y).norm() == abs(a - b)


def test_criterion_08_wiener(criterion):
    with criterion(8, "inversion in the single-network completion"):
        x = we_from_laurent(K2, {0: 5, 1: -1})
        r = we_invert(x, 1e-6)
        assert r.invertible and r.residual_norm <= 1e-6
        # the geometric series (1/5) Σ (K2/5)^k with as many terms as the inverse
        n = max(k for k, _ in r.inverse.coeffs)
        geo = series_eval(GEOM, we_from_laurent(K2, {1: Fraction(1, 5)}), n).value.scale(Fraction(1, 5))
        assert r.inverse == geo
        tail = float(Fraction(1, 5) * Fraction(2, 5) ** (n + 1) / Fraction(3, 5))
        assert abs(float(r.inverse.norm()) - 1 / 3) <= tail
        bad = we_invert(we_from_laurent(K2, {0: 2, 1: -1}))
        assert bad.invertible is False
        assert abs(abs(bad.witness) - 2) <= 1e-12
        assert abs(bad.witness - 2) <= 1e-9


def test_criterion_09_functional_calculus(criterion):
    with criterion(9, "Euler characteristic of exp(C4) and graph waves"):
        for n in range(0, 13):
            rep = functional_pushforward("euler_characteristic", EXP, cycle(4), n)
            assert rep.termwise == 1
        for base in (K2, cycle(5), octahedron()):
            g = we_from_laurent(base, {1: 1})
            for t in (Fraction(1), Fraction(-1, 3), Fraction(5, 2)):
                for n in (0, 1, 5, 12):
                    assert exp_i_t(g, t, n) == cos_plus_i_sin(g, t, n)


def test_criterion_10_primes(criterion):
    with criterion(10, "sieve, factoring and unique factorization"):
        start = time.perf_counter()
        s4 = sieve(4)
        assert (s4["classes"], s4["primes"], s4["composite_count"]) == (11, 8, 3)
        for n in (2, 3, 5, 7):
            s = sieve(n)
            assert s["composite_count"] == 0 and s["primes"] == s["classes"]
        for n in (4, 6):
            assert sieve(n)["composite_classes_per_labelled_graph"] < composite_share_bound(n)
        assert cert_multiset(factor(complete(6)).factors) == cert_multiset([K2, complete(3)])
        c4 = cycle(4)
        assert cert_multiset(factor(strong_product(c4, c4)).factors) == cert_multiset([c4, c4])
        small = [g for n in range(2, 7) for g in connected_classes(n)]
        for a, b in combinations_with_replacement(small, 2):
            if a.n * b.n <= 12:
                got = sorted(prime_certificates(strong_product(a, b)))
                assert got == sorted(prime_certificates(a) + prime_certificates(b))
        assert time.perf_counter() - start < 1800


def test_criterion_11_non_ufd(criterion):
    with criterion(11, "two distinct prime factorizations"):
        w = non_ufd_witness(K2)
        assert w["equal"] and w["certificate_equal"]
        assert w["pairwise_distinct"]
        assert w["all_prime"]


def test_criterion_12_number_theory_scans(criterion):
    with criterion(12, "progressions, squares plus one, doubles"):
        rep = progression_scan(1, cycle(4), 4)
        assert [r["n"] for r in rep["rows"]] == [1, 2, 3, 4]
        assert all(r["verdict"] == "prime" and r["reason"] == "component-search" for r in rep["rows"])
        sq = goldbach_landau_checks(cycle(4))["square_plus_one"]
        assert (sq["verdict"], sq["reason"]) == ("prime", "component-count-prime")
        double = goldbach_landau_checks(complete(4))["double"]
        assert double["g_is_prime"] is False and double["two_prime_representations"] == []


def test_criterion_13_capacity(criterion):
    with criterion(13, "independence numbers and the capacity bound"):
        start = time.perf_counter()
        c5 = cycle(5)
        assert independence_number(c5) == 2
        assert independence_number(strong_product(c5, c5)) == 5
        assert abs(shannon_capacity_lower_bound(c5, 2) - math.sqrt(5)) <= 1e-12
        assert time.perf_counter() - start < 60

