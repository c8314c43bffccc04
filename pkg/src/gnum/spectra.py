"""Connection Laplacians, Hodge data, Künneth checks and spectral zeta functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Mapping, Union

import numpy as np

from gnum.complex import (
    ChainComplex,
    ProductComplex,
    SimplicialComplex,
    Simplex,
    product_complex,
    whitney_complex,
)
from gnum.graph import Graph, disjoint_union
from gnum.linalg import bareiss_det, exact_rank, fraction_det, null_space
from gnum.polynomial import IntPolynomial

AnyComplex = Union[SimplicialComplex, ProductComplex, ChainComplex]

HARMONIC_TOL = 1e-8


@dataclass(frozen=True)
class ConnectionMatrix:
    matrix: np.ndarray
    simplices: tuple

    @cached_property
    def det(self) -> int:
        return bareiss_det(self.matrix.tolist())

    def to_json(self) -> dict:
        return {"matrix": self.matrix.tolist(), "det": self.det}


def connection_laplacian(c: SimplicialComplex | ProductComplex) -> ConnectionMatrix:
    if isinstance(c, ProductComplex):
        return ConnectionMatrix(c.intersection_matrix(), tuple((x.left, x.right) for x in c.cells))
    return ConnectionMatrix(c.connection_matrix(), c.simplices)


def energized_connection_laplacian(
    c: SimplicialComplex, h: Callable[[Simplex], Fraction] | Mapping[Simplex, Fraction]
) -> list[list[Fraction]]:
    """Entry (x, y) sums h over the nonempty simplices inside x ∩ y."""
    energy = h.__getitem__ if isinstance(h, Mapping) else h
    cache: dict[Simplex, Fraction] = {}

    def weight(common: Simplex) -> Fraction:
        if common not in cache:
            cache[common] = sum(
                (Fraction(energy(z)) for r in range(1, len(common) + 1) for z in combinations(common, r)),
                Fraction(0),
            )
        return cache[common]

    simplices = c.simplices
    return [
        [weight(tuple(sorted(set(x) & set(y)))) for y in simplices]
        for x in simplices
    ]


def energized_det(c: SimplicialComplex, h) -> Fraction:
    return fraction_det(energized_connection_laplacian(c, h))


def tensor_identity_check(a: Graph, b: Graph) -> bool:
    ca, cb = whitney_complex(a), whitney_complex(b)
    la, lb = ca.connection_matrix(), cb.connection_matrix()
    product_ok = np.array_equal(product_complex(ca, cb).intersection_matrix(), np.kron(la, lb))

    # sum case: reorder the union's simplices as (a's simplices, shifted b's)
    union = whitney_complex(disjoint_union(a, b))
    order = [union.index[s] for s in ca.simplices]
    order += [union.index[tuple(v + a.n for v in s)] for s in cb.simplices]
    lu = union.connection_matrix()[np.ix_(order, order)]
    block = np.zeros_like(lu)
    block[: len(la), : len(la)] = la
    block[len(la):, len(la):] = lb
    return product_ok and np.array_equal(lu, block)


def _chain(c: AnyComplex) -> ChainComplex:
    if isinstance(c, ChainComplex):
        return c
    return c.chain_complex


@dataclass
class HodgeData:
    boundaries: list[np.ndarray]  # d_k : C_k -> C_{k-1}
    laplacians: list[np.ndarray]
    betti: list[int]
    harmonic: list[np.ndarray] = field(repr=False)  # orthonormal columns per degree

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def hodge(c: AnyComplex) -> HodgeData:
    cc = _chain(c)
    top = cc.top
    bds = [cc.boundary(k).astype(np.int64) for k in range(top + 2)]
    ranks = [exact_rank(d) for d in bds]
    betti = [cc.f_vector[k] - ranks[k] - ranks[k + 1] for k in range(top + 1)]
    laps, harm = [], []
    for k in range(top + 1):
        dk, dk1 = bds[k].astype(float), bds[k + 1].astype(float)
        lap = dk.T @ dk + dk1 @ dk1.T
        laps.append(lap)
        harm.append(null_space(lap))
    while betti and betti[-1] == 0:
        betti.pop()
    return HodgeData(bds, laps, betti, harm)


def betti_numbers(c: AnyComplex | Graph) -> list[int]:
    if isinstance(c, Graph):
        c = whitney_complex(c)
    return hodge(c).betti


def poincare_polynomial(c: AnyComplex | Graph) -> IntPolynomial:
    return IntPolynomial(betti_numbers(c))


def kunneth_check(a: Graph, b: Graph) -> bool:
    lhs = poincare_polynomial(product_complex(whitney_complex(a), whitney_complex(b)))
    return lhs == poincare_polynomial(a) * poincare_polynomial(b)


class NotHarmonic(ValueError):
    pass


def _harmonic_residual(data: HodgeData, k: int, f: np.ndarray) -> float:
    lap = data.laplacians[k]
    norm = float(np.linalg.norm(f))
    return float(np.linalg.norm(lap @ f)) / norm if norm else 0.0


def kunneth_product_form(
    a: SimplicialComplex, k: int, fa, b: SimplicialComplex, l: int, fb
) -> tuple[int, np.ndarray]:
    """(k+l, cochain) with value fa(x)·fb(y) on each product cell x⊗y.

    The cochain is indexed like ``product_complex(a, b).chain_complex.cells[k+l]``.
    Inputs that are not harmonic (relative residual above tolerance) are refused.
    """
    fa, fb = np.asarray(fa, dtype=float), np.asarray(fb, dtype=float)
    for cx, deg, f, side in ((a, k, fa, "left"), (b, l, fb, "right")):
        data = hodge(cx)
        if deg > len(data.laplacians) - 1 or len(f) != data.laplacians[deg].shape[0]:
            raise NotHarmonic(f"{side} form has the wrong degree or length")
        if _harmonic_residual(data, deg, f) > HARMONIC_TOL:
            raise NotHarmonic(f"{side} form is not harmonic")
    n = k + l
    cells = product_complex(a, b).chain_complex.cells[n]
    out = np.zeros(len(cells))
    for pos, (kk, i, ll, j) in enumerate(cells):
        if kk == k and ll == l:
            out[pos] = fa[i] * fb[j]
    return n, out


def kunneth_harmonic_span(a: SimplicialComplex, b: SimplicialComplex, n: int) -> dict:
    """Rank of the product forms of degree n against the product's b_n."""
    ha, hb = hodge(a), hodge(b)
    prod = product_complex(a, b)
    hp = hodge(prod)
    forms = []
    for k in range(len(ha.harmonic)):
        l = n - k
        if not 0 <= l < len(hb.harmonic):
            continue
        for fa in ha.harmonic[k].T:
            for fb in hb.harmonic[l].T:
                forms.append(kunneth_product_form(a, k, fa, b, l, fb)[1])
    residual = max((_harmonic_residual(hp, n, f) for f in forms), default=0.0)
    rank = int(np.linalg.matrix_rank(np.array(forms))) if forms else 0
    expected = hp.betti[n] if n < len(hp.betti) else 0
    return {"degree": n, "forms": len(forms), "rank": rank, "betti": expected, "max_residual": residual}


def connection_spectrum(c: SimplicialComplex | ProductComplex) -> np.ndarray:
    """Sorted eigenvalues of the connection Laplacian."""
    m = connection_laplacian(c).matrix
    if m.size == 0:
        return np.zeros(0)
    return np.sort(np.linalg.eigvalsh(m.astype(float)))


def zeta_from_spectrum(eigenvalues: np.ndarray, s: complex) -> complex:
    lam = np.asarray(eigenvalues, dtype=float) ** 2
    return complex(np.sum(np.exp(-complex(s) * np.log(lam))))


def integer_inverse(c: SimplicialComplex | ProductComplex) -> np.ndarray:
    """L⁻¹ for the unimodular connection matrix, rounded and checked exactly."""
    m = connection_laplacian(c).matrix.astype(np.int64)
    inv = np.rint(np.linalg.inv(m.astype(float))).astype(np.int64)
    if not np.array_equal(m @ inv, np.eye(len(m), dtype=np.int64)):
        raise ArithmeticError("rounded inverse failed the exact check")
    return inv


def _power_trace(m: np.ndarray, k: int) -> int:
    """tr(m^k) in exact integer arithmetic."""
    if k == 0:
        return len(m)
    half = k // 2
    p = np.eye(len(m), dtype=object)
    base = m.astype(object)
    for _ in range(half):
        p = p.dot(base)
    # tr(AB) = Σ A ∘ Bᵀ with A = m^half and B = m^(k - half)
    q = p.dot(base) if k % 2 else p
    return int(np.sum(p * q.T))


def spectral_zeta(c: SimplicialComplex | ProductComplex | Graph, s: complex) -> complex:
    """Σ λ^(-s) over the eigenvalues λ of L², principal branch.

    At integer s this is tr(L^(-2s)) or tr(L^(2|s|)), computed exactly because
    L⁻¹ has integer entries.
    """
    if isinstance(c, Graph):
        c = whitney_complex(c)
    s = complex(s)
    if s.imag == 0 and s.real.is_integer() and connection_laplacian(c).matrix.size:
        k = int(s.real)
        m = integer_inverse(c) if k > 0 else connection_laplacian(c).matrix.astype(np.int64)
        return complex(_power_trace(m, 2 * abs(k)))
    return zeta_from_spectrum(connection_spectrum(c), s)
