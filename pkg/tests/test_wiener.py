import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gnum.arithmetic.integers import gi
from gnum.arithmetic.rationals import GraphRational, gr_make
from gnum.arithmetic.scalars import GaussianRational
from gnum.arithmetic.wiener import (
    BaseMismatch,
    NotSingleNetwork,
    WienerElement,
    certify_symbol,
    from_rational,
    we_from_laurent,
    we_invert,
    we_mul,
    we_norm,
)
from gnum.canonical import certificate
from gnum.graph import Graph, complete, cycle, path, points

K2 = complete(2)


def laurent(base, pairs):
    return we_from_laurent(base, dict(pairs))


@st.composite
def elements(draw, base=K2):
    keys = draw(st.lists(st.integers(-3, 3), min_size=1, max_size=5, unique=True))
    vals = draw(
        st.lists(
            st.fractions(min_value=-4, max_value=4, max_denominator=6),
            min_size=len(keys),
            max_size=len(keys),
        )
    )
    return we_from_laurent(base, dict(zip(keys, vals)))


def test_from_laurent_examples():
    assert laurent(K2, {1: 1}).norm() == 2
    assert laurent(K2, {-1: 1}).norm() == Fraction(1, 2)
    x = laurent(K2, {0: 5, 1: -1})
    assert we_norm(x) == 7
    assert x == WienerElement.constant(5, x.base) - laurent(K2, {1: 1})


def test_from_laurent_needs_prime_base():
    with pytest.raises(ValueError):
        we_from_laurent(complete(4), {1: 1})
    with pytest.raises(ValueError):
        we_from_laurent(points(2), {1: 1})


def test_difference_of_squares():
    g = laurent(cycle(5), {1: 1})
    one = WienerElement.constant(1, g.base)
    assert we_mul(one + g, one - g) == one - g * g


def test_base_mismatch():
    with pytest.raises(BaseMismatch):
        laurent(K2, {1: 1}) * laurent(cycle(4), {1: 1})
    # constants live in every single-network algebra
    assert (WienerElement.constant(3) * laurent(K2, {1: 1})).norm() == 6


def test_submultiplicative_200_pairs():
    rng = random.Random(9)
    for _ in range(200):
        a = {rng.randint(-3, 3): Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)}
        b = {rng.randint(-3, 3): Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)}
        x, y = laurent(K2, a), laurent(K2, b)
        assert (x * y).norm() <= x.norm() * y.norm()


@given(elements(base=path(3)), elements(base=path(3)))
def test_submultiplicative_random(x, y):
    assert (x * y).norm() <= x.norm() * y.norm()


@pytest.mark.parametrize("n", [0, 3, 10, 25])
def test_geometric_partial_sum_telescopes(n):
    x = laurent(K2, {0: 5, 1: -1})
    s = laurent(K2, {k: Fraction(1, 5 ** (k + 1)) for k in range(n + 1)})
    defect = x * s - WienerElement.constant(1, x.base)
    assert defect == laurent(K2, {n + 1: -Fraction(1, 5 ** (n + 1))})
    assert defect.norm() == Fraction(2, 5) ** (n + 1)


def test_invert_five_minus_k2():
    x = laurent(K2, {0: 5, 1: -1})
    r = we_invert(x, 1e-6)
    assert r.invertible and r.residual_norm <= 1e-6
    for k in range(6):
        assert r.inverse.coefficient(k) == Fraction(1, 5 ** (k + 1))
    assert abs(float(r.inverse.norm()) - 1 / 3) <= 1e-6


def test_invert_two_minus_k2_has_witness():
    r = we_invert(laurent(K2, {0: 2, 1: -1}))
    assert r.invertible is False
    assert abs(r.witness - 2) < 1e-9
    assert abs(abs(r.witness) - 2) < 1e-12


def test_invert_constant():
    r = we_invert(WienerElement.constant(3))
    assert r.invertible and r.inverse == WienerElement.constant(Fraction(1, 3))


def test_invert_zero():
    r = we_invert(WienerElement.constant(0))
    assert r.invertible is False


def test_invert_without_dominant_term():
    # no term dominates (Neumann ratio ≥ 1) yet the symbol stays away from 0 on |z| = 2
    # 1 + K2/2 + 1/K2 has weighted terms 1, 1, 1/2
    x = laurent(K2, {0: 1, 1: Fraction(1, 2), -1: 1})
    ok, low, _, _, _ = certify_symbol(x)
    assert ok and low > 0
    r = we_invert(x, 1e-9)
    assert r.invertible and r.method == "fourier"
    assert r.residual_norm <= 1e-9


@given(elements())
def test_certified_inverses_have_small_residual(x):
    r = we_invert(x, 1e-8)
    if r.invertible:
        assert r.residual_norm <= 1e-8
    elif r.invertible is False:
        assert abs(x.symbol(r.witness)) <= 1e-6 * max(1.0, float(x.norm()))


def test_symbol_on_the_circle():
    x = laurent(K2, {0: 2, 1: -1})
    assert abs(x.symbol(2)) < 1e-12
    assert abs(x.symbol(-2) - 4) < 1e-12


def test_from_rational():
    q = gr_make(gi(complete(4)) + gi(1), [K2])
    x = from_rational(q)
    assert x == laurent(K2, {1: 1, -1: 1})
    assert x.norm() == q.norm()
    with pytest.raises(NotSingleNetwork):
        from_rational(GraphRational.lift(gi(K2) + gi(cycle(4))))


def test_gaussian_coefficients():
    i = GaussianRational(0, 1)
    x = laurent(K2, {1: i})
    assert (x * x) == laurent(K2, {2: -1})
    assert x.norm() == 2


def test_json_round_trip():
    x = laurent(cycle(5), {-2: Fraction(1, 3), 0: 5, 4: Fraction(-7, 2)})
    data = x.to_json()
    assert data["coeffs"] == {"-2": "1/3", "0": "5", "4": "-7/2"}
    assert certificate(Graph.from_json(data["base"])) == certificate(cycle(5))
    assert WienerElement.from_json(data) == x
