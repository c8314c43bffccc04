"""Command line front end: ``gnum COMMAND ... [--json]``.

Exit status is 0 on success, 2 when the input is well formed but has no
answer (a localization or divergence failure, for instance), and 1 on usage
or syntax errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Callable, Sequence

from gnum.arithmetic.calculus import DivergenceError, series_by_name, series_eval
from gnum.arithmetic.integers import GraphInteger, monomial_graph, prime_euler_characteristic
from gnum.arithmetic.rationals import LocalizationError
from gnum.arithmetic.wiener import we_invert
from gnum.canonical import graph_from_certificate
from gnum.cli.evaluate import EvaluationError, evaluate, evaluate_exact, evaluate_wiener
from gnum.cli.expr import ExprSyntaxError, parse, to_text
from gnum.complex import convolve, product_complex, whitney_complex
from gnum.factoring import FactorSearchOverflow, certify, factor
from gnum.functionals import (
    SizeOverflow,
    curvature,
    euler_characteristic,
    f_vector,
    independence_number,
    multiplicativity_audit,
    wu_characteristic,
)
from gnum.graph import Graph, complete, cycle, path, power, star
from gnum.naming import Monomial, graph_name
from gnum.polynomial import IntPolynomial
from gnum.primes import is_prime_element, progression_scan, sieve
from gnum.spectra import betti_numbers, kunneth_harmonic_span, poincare_polynomial, spectral_zeta

SCHEMA_VERSION = 1

DOMAIN_ERRORS = (
    EvaluationError,
    LocalizationError,
    DivergenceError,
    SizeOverflow,
    FactorSearchOverflow,
    OverflowError,
    ZeroDivisionError,
    ValueError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


# ---------------------------------------------------------------------------
# value helpers


def _integer(text: str) -> GraphInteger:
    value = evaluate(text)
    if not isinstance(value, GraphInteger):
        raise EvaluationError(f"{text} is not a graph integer")
    return value


def _graph(text: str) -> Graph:
    value = _integer(text)
    if not value or not value.is_graph():
        raise EvaluationError(f"{text} is not a graph")
    return value.to_graph()


def _signed_sum(x: GraphInteger, per_monomial: Callable[[Monomial], list[int]]) -> list[int]:
    total: list[int] = []
    for mono, c in x.terms:
        vec = per_monomial(mono)
        total += [0] * (len(vec) - len(total))
        for i, v in enumerate(vec):
            total[i] += c * v
    while total and total[-1] == 0:
        total.pop()
    return total


def _betti_of_monomial(mono: Monomial) -> list[int]:
    """Betti numbers of a product of primes, through the product complex."""
    primes = [whitney_complex(graph_from_certificate(p)) for p in mono]
    if not primes:
        return [1]
    if len(primes) == 1:
        return betti_numbers(primes[0])
    head = betti_numbers(product_complex(primes[0], primes[1]))
    for c in primes[2:]:
        head = convolve(head, betti_numbers(c))
    return head


def _zeta_of_monomial(mono: Monomial, s: complex) -> complex:
    primes = [whitney_complex(graph_from_certificate(p)) for p in mono]
    if not primes:
        return spectral_zeta(complete(1), s)
    if len(primes) == 1:
        return spectral_zeta(primes[0], s)
    value = spectral_zeta(product_complex(primes[0], primes[1]), s)
    for c in primes[2:]:
        value *= spectral_zeta(c, s)
    return value


def _fraction_json(x: Fraction) -> str:
    return str(x)


def _parse_complex(text: str) -> complex:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"--s expects RE,IM, got {text!r}") from exc
    if len(parts) == 1:
        parts.append(0.0)
    if len(parts) != 2:
        raise UsageError(f"--s expects RE,IM, got {text!r}")
    return complex(parts[0], parts[1])


def _value_json(value) -> dict:
    kind = "integer" if isinstance(value, GraphInteger) else "rational"
    return {"kind": kind, "value": str(value), "norm": str(value.norm()), "terms": value.to_json()}


# ---------------------------------------------------------------------------
# commands; each returns (human text, json report)


def cmd_eval(args) -> tuple[str, dict]:
    value = evaluate(args.expr)
    report = {"expression": to_text(parse(args.expr)), **_value_json(value)}
    return f"{value}\nnorm {value.norm()}", report


def cmd_chi(args) -> tuple[str, dict]:
    value = evaluate_exact(args.expr)
    num = Fraction(0)
    for m, c in value.terms:
        term = Fraction(c)
        for p in m:
            term *= prime_euler_characteristic(p)
        num += term
    den = 1
    for p in value.den:
        den *= prime_euler_characteristic(p)
    if den == 0:
        raise EvaluationError(f"the denominator of {value} has Euler characteristic 0")
    chi = num / den
    return str(chi), {"expression": args.expr, "value": _fraction_json(chi)}


def cmd_fvector(args) -> tuple[str, dict]:
    x = _integer(args.expr)
    vec = _signed_sum(x, lambda m: f_vector(monomial_graph(m)))
    return " ".join(map(str, vec)) or "()", {"expression": args.expr, "fvector": vec}


def cmd_wu(args) -> tuple[str, dict]:
    if args.k < 1:
        raise UsageError("--k must be positive")
    x = _integer(args.expr)
    total = sum(c * wu_characteristic(monomial_graph(m), args.k) for m, c in x.terms)
    return str(total), {"expression": args.expr, "k": args.k, "value": total}


def cmd_betti(args) -> tuple[str, dict]:
    x = _integer(args.expr)
    b = _signed_sum(x, _betti_of_monomial)
    return " ".join(map(str, b)) or "0", {"expression": args.expr, "betti": b}


def cmd_poincare(args) -> tuple[str, dict]:
    x = _integer(args.expr)
    p = IntPolynomial(_signed_sum(x, _betti_of_monomial))
    return str(p), {"expression": args.expr, "coefficients": list(p.coefficients), "polynomial": str(p)}


def cmd_zeta(args) -> tuple[str, dict]:
    s = _parse_complex(args.s)
    x = _integer(args.expr)
    z = sum((c * _zeta_of_monomial(m, s) for m, c in x.terms), 0j)
    return f"{z.real:.15g} {z.imag:+.15g}i", {"expression": args.expr, "s": [s.real, s.imag], "value": [z.real, z.imag]}


def cmd_curvature(args) -> tuple[str, dict]:
    g = _graph(args.graph)
    ks = [curvature(g, v) for v in range(g.n)]
    total = sum(ks, Fraction(0))
    chi = euler_characteristic(g)
    text = "\n".join(f"{v}: {k}" for v, k in enumerate(ks)) + f"\nsum {total} chi {chi}"
    return text, {"graph": g.to_json(), "curvatures": [str(k) for k in ks], "sum": str(total), "euler_characteristic": chi}


def cmd_factor(args) -> tuple[str, dict]:
    g = _graph(args.graph)
    fac = factor(g)
    names = [graph_name(f) for f in fac.factors] or ["K1"]
    return " * ".join(names), {"graph": g.to_json(), "factors": [f.to_json() for f in fac.factors], "names": names}


def cmd_certify(args) -> tuple[str, dict]:
    x = _integer(args.graph)
    if x.is_graph() and len(x.terms) == 1 and x.terms[0][1] == 1 and x.terms[0][0]:
        g = x.to_graph()
        cert = certify(g)
        report = {"connected": True, **cert.to_json()}
        text = f"{cert.verdict} ({cert.reason})"
        if cert.factors:
            text += ": " + " * ".join(graph_name(f) for f in cert.factors)
        return text, report
    verdict = is_prime_element(x)
    text = f"{verdict.verdict} ({verdict.reason})"
    if verdict.factors:
        text += ": " + " * ".join(f"({f})" for f in verdict.factors)
    return text, {"connected": False, **verdict.to_json()}


def cmd_sieve(args) -> tuple[str, dict]:
    report = sieve(args.n)
    text = (
        f"n={report['n']}: {report['classes']} classes, {report['connected']} connected, "
        f"{report['primes']} prime, {report['composite_count']} composite"
    )
    for row in report["composites"]:
        text += f"\n  {row['name']} = ({row['factors'][0]}) * ({row['factors'][1]})"
    text += f"\ncomposite share {report['composite_classes_per_labelled_graph']:.6g} vs bound {report['bound']:.6g}"
    return text, report


def cmd_progression(args) -> tuple[str, dict]:
    a = _integer(args.a)
    g = _graph(args.g)
    report = progression_scan(a, g, args.nmax)
    lines = [f"{r['n']}: {r['element']} {r['verdict']}" for r in report["rows"]]
    return "\n".join(lines), report


def _series_argument(text: str):
    try:
        return evaluate_exact(text), "exact"
    except LocalizationError:
        return evaluate_wiener(text), "wiener"


def _brief(value, limit: int = 400) -> str:
    """Text form of a value, shortened for long completion elements; JSON keeps every term."""
    text = str(value)
    coeffs = getattr(value, "coeffs", None)
    if len(text) <= limit:
        return text
    if not coeffs:
        parts = re.split(r" (?=[+-] )", text)
        kept = []
        while parts and sum(map(len, kept)) + len(parts[0]) <= limit:
            kept.append(parts.pop(0))
        return " ".join(kept or parts[:1]) + f" ... ({len(parts)} more terms; use --json for all)"
    lo, hi = coeffs[0][0], coeffs[-1][0]
    head = ", ".join(f"{n}: {complex(a).real:.6g}" if not complex(a).imag else f"{n}: {complex(a):.6g}" for n, a in coeffs[:4])
    return f"{len(coeffs)} exact terms, powers {lo}..{hi}; leading {{{head}, ...}} (use --json for all)"


def cmd_series(args) -> tuple[str, dict]:
    a = Fraction(args.a) if args.a is not None else None
    f = series_by_name(args.func, a)
    x, mode = _series_argument(args.expr)
    res = series_eval(f, x, args.trunc)
    norm = res.value_norm
    text = f"{_brief(res.value)}\nnorm {float(norm):.15g}\ntail bound {res.tail_bound:.6g}"
    return text, {"expression": args.expr, "mode": mode, **res.to_json()}


def cmd_invert(args) -> tuple[str, dict]:
    x = evaluate_wiener(args.expr)
    res = we_invert(x, args.tol)
    if res.invertible:
        text = f"inverse {_brief(res.inverse)}\nresidual {res.residual_norm:.3g} ({res.method}, norm {float(res.inverse.norm()):.12g})"
    elif res.invertible is False:
        text = f"not invertible: symbol vanishes near z = {res.witness:.12g} (|z| = {abs(res.witness):.12g})"
    else:
        text = "undecided"
    return text, {"expression": args.expr, "element": x.to_json(), **res.to_json()}


AUDIT_GRAPHS = (complete(1), complete(2), complete(3), path(3), cycle(4), path(4), star(4))


def cmd_audit(args) -> tuple[str, dict]:
    reports = multiplicativity_audit(list(AUDIT_GRAPHS))
    lines = [
        f"{r['functional']:<22}{r['product_kind']:<17}{r['pairs_checked'] - len(r['violations'])}/{r['pairs_checked']} multiplicative"
        for r in reports
    ]
    return "\n".join(lines), {"graphs": [graph_name(g) for g in AUDIT_GRAPHS], "reports": reports}


def cmd_capacity(args) -> tuple[str, dict]:
    if args.n < 1:
        raise UsageError("--n must be positive")
    g = _graph(args.graph)
    rows = []
    for k in range(1, args.n + 1):
        if g.n**k > 64:
            break
        alpha = independence_number(power(g, k))
        rows.append({"k": k, "alpha": alpha, "bound": alpha ** (1.0 / k)})
    if not rows:
        raise SizeOverflow(f"{g.n} vertices exceed the independence search limit")
    best = max(r["bound"] for r in rows)
    text = "\n".join(f"alpha(G^{r['k']}) = {r['alpha']}" for r in rows) + f"\nlower bound {best:.15g}"
    report = {"graph": g.to_json(), "powers": rows, "lower_bound": best}
    if len(rows) < args.n:
        report["truncated_at"] = rows[-1]["k"]
        text += f"\n(stopped at k={rows[-1]['k']}; larger powers exceed the search limit)"
    return text, report


def cmd_kunneth(args) -> tuple[str, dict]:
    a, b = _graph(args.a), _graph(args.b)
    ca, cb = whitney_complex(a), whitney_complex(b)
    pa, pb = poincare_polynomial(ca), poincare_polynomial(cb)
    pp = poincare_polynomial(product_complex(ca, cb))
    spans = [kunneth_harmonic_span(ca, cb, n) for n in range(len(pp.coefficients))]
    equal = pp == pa * pb
    text = f"({pa}) * ({pb}) = {pa * pb}\nproduct complex: {pp}\n{'equal' if equal else 'DIFFERENT'}"
    report = {
        "a": str(pa), "b": str(pb), "product": str(pp),
        "coefficients": list(pp.coefficients), "equal": equal, "harmonic": spans,
    }
    return text, report


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gnum", description="Arithmetic of graphs under disjoint union and strong product.")
    p.add_argument("--json", action="store_true", help="print a JSON report instead of text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn, help_text: str, *positionals: str):
        sp = sub.add_parser(name, help=help_text)
        for pos in positionals:
            sp.add_argument(pos)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(handler=fn)
        return sp

    add("eval", cmd_eval, "exact value of an expression", "expr")
    add("chi", cmd_chi, "Euler characteristic", "expr")
    add("fvector", cmd_fvector, "simplex counts per dimension", "expr")
    add("wu", cmd_wu, "Wu characteristic", "expr").add_argument("--k", type=int, default=2)
    add("betti", cmd_betti, "Betti numbers (products via product complexes)", "expr")
    add("poincare", cmd_poincare, "Poincare polynomial", "expr")
    add("zeta", cmd_zeta, "spectral zeta of the connection Laplacian", "expr").add_argument("--s", default="2,0")
    add("curvature", cmd_curvature, "Levitt curvature per vertex", "graph")
    add("factor", cmd_factor, "prime factors of a connected graph", "graph")
    add("certify", cmd_certify, "primality certificate", "graph")
    add("sieve", cmd_sieve, "prime and composite classes on n vertices", "n").set_defaults(_int="n")
    sp = add("progression", cmd_progression, "primality along a + n*g")
    sp.add_argument("--a", required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--nmax", type=int, default=5)
    sp = add("series", cmd_series, "truncated power series of an expression", "func", "expr")
    sp.add_argument("--trunc", type=int, default=10)
    sp.add_argument("--a", default=None, help="scale for log1p")
    add("invert", cmd_invert, "inverse in the single-network completion", "expr").add_argument("--tol", type=float, default=1e-9)
    add("audit-multiplicativity", cmd_audit, "which functionals multiply under products")
    add("capacity", cmd_capacity, "independence numbers of strong powers", "graph").add_argument("--n", type=int, default=2)
    add("kunneth", cmd_kunneth, "Poincare polynomials of a product complex", "a", "b")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "_int", None):
            try:
                setattr(args, args._int, int(getattr(args, args._int)))
            except ValueError as exc:
                raise UsageError(f"{args._int} must be an integer") from exc
        text, report = args.handler(args)
    except (UsageError, ExprSyntaxError) as exc:
        print(f"gnum: error: {exc}", file=sys.stderr)
        return 1
    except DOMAIN_ERRORS as exc:
        print(f"gnum: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({"command": args.command, "schema_version": SCHEMA_VERSION, **report}, indent=2, default=str))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
