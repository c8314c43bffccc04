"""Truncated weighted-ℓ¹ Laurent series Σ a_n Gⁿ in one connected prime G.

With weight c = vertex count of G, the norm is Σ |a_n| cⁿ.  Characters must
satisfy |φ(G)| ≤ c and |φ(G⁻¹)| ≤ 1/c, so the symbol f(z) = Σ a_n zⁿ lives on
the circle |z| = c; an element is invertible exactly when f has no zero there.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

from gnum.arithmetic.rationals import GraphRational
from gnum.arithmetic.scalars import GaussianRational, Scalar, exact_abs, parse_scalar, simplify
from gnum.canonical import certificate, graph_from_certificate
from gnum.graph import Graph
from gnum.naming import cert_vertices, certificate_name


class BaseMismatch(ValueError):
    pass


class NotSingleNetwork(ValueError):
    """The value involves more than one prime and has no single-network form."""


def _clean(coeffs: Mapping[int, Scalar]) -> tuple[tuple[int, Scalar], ...]:
    out = []
    for n, a in sorted(coeffs.items()):
        a = simplify(a)
        if a:
            out.append((int(n), a))
    return tuple(out)


@dataclass(frozen=True)
class WienerElement:
    base: bytes | None  # prime certificate; None for pure constants
    coeffs: tuple[tuple[int, Scalar], ...]

    @classmethod
    def make(cls, base: bytes | None, coeffs: Mapping[int, Scalar]) -> "WienerElement":
        cleaned = _clean(coeffs)
        if base is None and any(n for n, _ in cleaned):
            raise ValueError("nonconstant element needs a base")
        return cls(base, cleaned)

    @classmethod
    def constant(cls, a: Scalar, base: bytes | None = None) -> "WienerElement":
        return cls.make(base, {0: a})

    @property
    def weight(self) -> int:
        return cert_vertices(self.base) if self.base is not None else 1

    @property
    def base_graph(self) -> Graph | None:
        return graph_from_certificate(self.base) if self.base is not None else None

    def as_dict(self) -> dict[int, Scalar]:
        return dict(self.coeffs)

    def coefficient(self, n: int) -> Scalar:
        return self.as_dict().get(n, Fraction(0))

    @property
    def support(self) -> tuple[int, int]:
        if not self.coeffs:
            return (0, 0)
        return (self.coeffs[0][0], self.coeffs[-1][0])

    def is_real(self) -> bool:
        return not any(isinstance(a, GaussianRational) for _, a in self.coeffs)

    def norm(self):
        """Σ |a_n| cⁿ, exact for rational coefficients."""
        c = Fraction(self.weight)
        if self.is_real():
            return sum((abs(a) * c**n for n, a in self.coeffs), Fraction(0))
        return math.fsum(abs(a) * float(c) ** n for n, a in self.coeffs)

    def _join(self, other: "WienerElement") -> bytes | None:
        if self.base is None:
            return other.base
        if other.base is None or other.base == self.base:
            return self.base
        raise BaseMismatch("elements of different single-network algebras")

    def __add__(self, other) -> "WienerElement":
        other = lift(other)
        base = self._join(other)
        acc = self.as_dict()
        for n, a in other.coeffs:
            acc[n] = acc.get(n, 0) + a
        return WienerElement.make(base, acc)

    __radd__ = __add__

    def __neg__(self) -> "WienerElement":
        return WienerElement(self.base, tuple((n, -a) for n, a in self.coeffs))

    def __sub__(self, other) -> "WienerElement":
        return self + (-lift(other))

    def __rsub__(self, other) -> "WienerElement":
        return lift(other) - self

    def __mul__(self, other) -> "WienerElement":
        other = lift(other)
        base = self._join(other)
        acc: dict[int, Scalar] = {}
        for n1, a1 in self.coeffs:
            for n2, a2 in other.coeffs:
                acc[n1 + n2] = acc.get(n1 + n2, 0) + a1 * a2
        return WienerElement.make(base, acc)

    __rmul__ = __mul__

    def scale(self, s: Scalar) -> "WienerElement":
        return WienerElement.make(self.base, {n: a * s for n, a in self.coeffs})

    def __pow__(self, k: int) -> "WienerElement":
        if k < 0:
            raise ValueError("use we_invert for negative powers")
        result = WienerElement.constant(1, self.base)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def symbol(self, z: complex) -> complex:
        return sum(complex(a) * z**n for n, a in self.coeffs) if self.coeffs else 0j

    def lipschitz(self) -> float:
        """Bound on |d/dθ f(c e^{iθ})|: Σ |n| |a_n| cⁿ."""
        c = float(self.weight)
        return math.fsum(abs(n) * float(abs(a)) * c**n for n, a in self.coeffs)

    def to_json(self) -> dict:
        return {
            "base": self.base_graph.to_json() if self.base is not None else None,
            "coeffs": {str(n): str(a) for n, a in self.coeffs},
            "norm": str(self.norm()) if self.is_real() else float(self.norm()),
        }

    @classmethod
    def from_json(cls, data: dict) -> "WienerElement":
        base = certificate(Graph.from_json(data["base"])) if data.get("base") else None
        return cls.make(base, {int(n): parse_scalar(a) for n, a in data["coeffs"].items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        name = certificate_name(self.base) if self.base is not None else "G"
        parts = []
        for n, a in self.coeffs:
            coef = str(a)
            if isinstance(a, GaussianRational) and a.re and a.im:
                coef = f"({coef})"
            if n == 0:
                parts.append(coef)
            else:
                power = name if n == 1 else f"{name}^{n}"
                if a == 1 or a == -1:
                    parts.append(power if a == 1 else f"-{power}")
                else:
                    parts.append(f"{coef}*{power}")
        return " + ".join(parts).replace("+ -", "- ")


def lift(x) -> WienerElement:
    if isinstance(x, WienerElement):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return WienerElement.constant(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a Wiener element")


def _require_prime_base(g: Graph) -> bytes:
    from gnum.factoring import prime_certificates

    if not g.is_connected():
        raise ValueError("the base of a single-network algebra must be connected")
    primes = prime_certificates(g)
    if len(primes) != 1:
        raise ValueError("the base of a single-network algebra must be a prime graph")
    return primes[0]


def we_from_laurent(base: Graph, coeffs: Mapping[int, Scalar]) -> WienerElement:
    return WienerElement.make(_require_prime_base(base), coeffs)


def we_mul(x: WienerElement, y: WienerElement) -> WienerElement:
    return x * y


def we_norm(x: WienerElement):
    return x.norm()


def from_rational(x: GraphRational, base: bytes | None = None) -> WienerElement:
    """Single-network form of a graph rational whose terms are powers of one prime."""
    coeffs: dict[int, Fraction] = {}
    for mono, c in x.terms:
        for p in mono + x.den:
            if base is None:
                base = p
            elif p != base:
                raise NotSingleNetwork(f"{x} involves more than one prime")
        coeffs[len(mono) - len(x.den)] = c
    return WienerElement.make(base, coeffs)


# ---------------------------------------------------------------------------
# inversion


@dataclass
class InversionResult:
    invertible: bool | None
    inverse: WienerElement | None = None
    residual_norm: float | None = None
    witness: complex | None = None
    min_symbol: float | None = None
    grid_points: int = 0
    lipschitz: float = 0.0
    method: str = ""
    terms: int = 0
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "invertible": self.invertible,
            "inverse": self.inverse.to_json() if self.inverse is not None else None,
            "residual_norm": self.residual_norm,
            "witness": None if self.witness is None else [self.witness.real, self.witness.imag],
            "witness_modulus": None if self.witness is None else abs(self.witness),
            "min_symbol": self.min_symbol,
            "grid_points": self.grid_points,
            "lipschitz": self.lipschitz,
            "method": self.method,
            "terms": self.terms,
            "notes": list(self.notes),
        }


def _refine_minimum(x: WienerElement, theta: float, width: float) -> tuple[float, complex]:
    """Golden-section search for the minimum of |f(c e^{iθ})| near θ."""
    c = float(x.weight)

    def mod(t: float) -> float:
        return abs(x.symbol(c * cmath.exp(1j * t)))

    lo, hi = theta - width, theta + width
    ratio = (math.sqrt(5) - 1) / 2
    a, b = hi - ratio * (hi - lo), lo + ratio * (hi - lo)
    fa, fb = mod(a), mod(b)
    for _ in range(200):
        if fa < fb:
            hi, b, fb = b, a, fa
            a = hi - ratio * (hi - lo)
            fa = mod(a)
        else:
            lo, a, fa = a, b, fb
            b = lo + ratio * (hi - lo)
            fb = mod(b)
    t = (lo + hi) / 2
    return mod(t), c * cmath.exp(1j * t)


def _weighted(x: WienerElement) -> dict[int, complex]:
    c = float(x.weight)
    return {n: complex(a) * c**n for n, a in x.coeffs}


def _circle_values(x: WienerElement, m: int) -> np.ndarray:
    """f(c e^{iθ_j}) on the m-point grid θ_j = 2πj/m."""
    theta = 2 * np.pi * np.arange(m) / m
    vals = np.zeros(m, dtype=complex)
    for n, w in _weighted(x).items():
        vals += w * np.exp(1j * n * theta)
    return vals


def certify_symbol(x: WienerElement, max_points: int = 1 << 16, zero_tol: float = 1e-12):
    """Sample f on |z| = c until the Lipschitz bound certifies no zero, or a zero is located.

    Returns (verdict, min |f| found, point attaining it, grid size, Lipschitz bound);
    the verdict is True (no zero), False (zero located) or None (undecided).
    """
    c = float(x.weight)
    lip = x.lipschitz()
    scale = max(float(x.norm()), 1e-300)
    m = 64
    while True:
        mods = np.abs(_circle_values(x, m))
        best_j = int(np.argmin(mods))
        best = float(mods[best_j])
        best_z = c * cmath.exp(2j * math.pi * best_j / m)
        if best <= zero_tol * scale:
            return False, best, best_z, m, lip
        if best > lip * math.pi / m:
            return True, best, best_z, m, lip
        low, z = _refine_minimum(x, 2 * math.pi * best_j / m, 2 * math.pi / m)
        if low <= zero_tol * scale:
            return False, low, z, m, lip
        if m >= max_points:
            return None, best, best_z, m, lip
        m *= 2


def _dominant(x: WienerElement) -> tuple[int, Scalar]:
    c = Fraction(x.weight)
    return max(x.coeffs, key=lambda t: (exact_abs(t[1]) * c ** t[0], -abs(t[0])))


def _rationalize(z: complex, limit: int = 10**12) -> Scalar:
    re = Fraction(z.real).limit_denominator(limit)
    im = Fraction(z.imag).limit_denominator(limit)
    return GaussianRational(re, im) if im else re


def _fourier_inverse(x: WienerElement, tol: float, max_points: int = 1 << 16) -> tuple[WienerElement, float, int]:
    """Coefficients of 1/f from sampled values, rationalized, residual checked exactly.

    Weighted coefficients b_k = y_k c^k are rationalized before dividing by c^k,
    so the rounding error in the norm does not grow with |k|.
    """
    c = Fraction(x.weight)
    one = WienerElement.constant(1, x.base)
    drop = tol * 1e-4
    m = 256
    y, res = one, math.inf
    while m <= max_points:
        b = np.fft.fft(1 / _circle_values(x, m)) / m
        if x.is_real():
            b = b.real.astype(complex)
        # aliasing shows up as mass near ±m/2; refine before paying for the exact check
        edge = np.abs(b[m // 2 - m // 16 : m // 2 + m // 16]).max()
        if edge <= drop or m == max_points:
            coeffs = {}
            for k in range(-m // 2 + 1, m // 2):
                bk = complex(b[k % m])
                if abs(bk) > drop:
                    coeffs[k] = _rationalize(bk) / c**k
            y = WienerElement.make(x.base, coeffs)
            res = float((one - x * y).norm())
            if res <= tol:
                break
        m *= 4
    return y, res, min(m, max_points)


NEUMANN_MAX_TERMS = 48


def we_invert(x: WienerElement, tolerance: float = 1e-9) -> InversionResult:
    """Certify the symbol has no zero on |z| = c, then build an inverse with ‖xy - 1‖ ≤ tolerance."""
    if not x.coeffs:
        return InversionResult(False, witness=complex(x.weight), min_symbol=0.0, method="zero")
    ok, low, z, m, lip = certify_symbol(x)
    result = InversionResult(ok, witness=None if ok else z, min_symbol=low, grid_points=m, lipschitz=lip)
    if ok is None:
        result.notes.append("grid refinement exhausted without a certificate either way")
        return result
    if not ok:
        return result
    one = WienerElement.constant(1, x.base)
    n0, a0 = _dominant(x)
    lead_inv = WienerElement.make(x.base, {-n0: 1 / GaussianRational.lift(a0)})
    r = lead_inv * x - one
    rn = float(r.norm())
    terms = 1
    if rn < 1:
        while rn**terms > tolerance:
            terms += 1
    if rn < 1 and terms <= NEUMANN_MAX_TERMS:
        # x = lead·(1 + r): inverse is lead⁻¹ Σ (-r)^k, summed exactly
        s, power = one, one
        for _ in range(1, terms):
            power = power * (-r)
            s = s + power
        y = s * lead_inv
        result.method = "neumann"
        result.terms = terms
    else:
        y, _, grid = _fourier_inverse(x, tolerance)
        result.method = "fourier"
        result.terms = len(y.coeffs)
        why = f"neumann ratio {rn:.3g} ≥ 1" if rn >= 1 else f"neumann needs {terms} terms"
        result.notes.append(f"{why}; sampled inverse on {grid} points")
    result.inverse = y
    result.residual_norm = float((x * y - one).norm())
    if result.residual_norm > tolerance:
        result.notes.append("tolerance not reached; the symbol is close to vanishing on the circle")
    return result
