"""Evaluation of expressions in the exact ring or in a single-network completion."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from gnum.arithmetic.integers import GraphInteger, gi
from gnum.arithmetic.rationals import GraphRational, LocalizationError
from gnum.arithmetic.wiener import BaseMismatch, NotSingleNetwork, WienerElement, from_rational, we_invert
from gnum.cli.expr import BinOp, Expr, FileRef, Name, Neg, Num, Pow, parse, to_text
from gnum.graph import Graph, complete, cycle, octahedron, path, points, star

_BUILTIN = re.compile(r"^(K|C|P|L|S)(\d+)$")


class EvaluationError(ValueError):
    """A well-formed expression with no value in the requested ring."""


def builtin_graph(name: str) -> Graph | None:
    if name == "Oct":
        return octahedron()
    m = _BUILTIN.match(name)
    if not m:
        return None
    kind, n = m.group(1), int(m.group(2))
    if kind == "K" and n >= 1:
        return complete(n)
    if kind == "C" and n >= 3:
        return cycle(n)
    if kind == "P" and n >= 1:
        return points(n)
    if kind == "L" and n >= 1:
        return path(n)
    if kind == "S" and n >= 2:
        return star(n)
    raise EvaluationError(f"{name} is not a valid graph literal")


def is_builtin_name(name: str) -> bool:
    return name == "Oct" or bool(_BUILTIN.match(name))


@dataclass
class SessionEnvironment:
    bindings: dict[str, Graph] = field(default_factory=dict)

    def bind(self, name: str, g: Graph) -> None:
        if is_builtin_name(name):
            raise ValueError(f"{name} is a built-in graph name")
        self.bindings[name] = g

    def lookup(self, name: str, pos: int = 0) -> Graph:
        g = builtin_graph(name)
        if g is not None:
            return g
        if name in self.bindings:
            return self.bindings[name]
        raise EvaluationError(f"unknown graph {name!r} at position {pos}")


def load_graph_file(path: str) -> Graph:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise EvaluationError(f"cannot read graph file {path}: {exc}") from exc
    return Graph.from_json(data)


def _atom_graph(e: Expr, env: SessionEnvironment) -> Graph:
    if isinstance(e, Name):
        return env.lookup(e.name, e.pos)
    return load_graph_file(e.path)


def evaluate_exact(e: Expr | str, env: SessionEnvironment | None = None) -> GraphRational:
    """Value in the graph rationals; see :func:`evaluate` for the integer-preserving wrapper."""
    env = env or SessionEnvironment()
    if isinstance(e, str):
        e = parse(e)

    def ev(x: Expr) -> GraphRational:
        if isinstance(x, Num):
            return GraphRational.lift(Fraction(x.value))
        if isinstance(x, (Name, FileRef)):
            return GraphRational.lift(gi(_atom_graph(x, env)))
        if isinstance(x, Neg):
            return -ev(x.operand)
        if isinstance(x, Pow):
            b = ev(x.base)
            if x.exponent < 0:
                _check_invertible(b, x.base)
            return b**x.exponent
        a, b = ev(x.left), ev(x.right)
        if x.op == "+":
            return a + b
        if x.op == "-":
            return a - b
        if x.op == "*":
            return a * b
        _check_invertible(b, x.right)
        return a / b

    return ev(e)


def _check_invertible(value: GraphRational, where: Expr) -> None:
    if not value.is_single_term():
        raise LocalizationError(
            f"cannot divide by {to_text(where)} = {value}: only connected graphs and nonzero rationals "
            "are invertible here (use the series or invert commands for the completion)"
        )


def evaluate(e: Expr | str, env: SessionEnvironment | None = None) -> GraphInteger | GraphRational:
    """Exact value; results without denominators come back as graph integers."""
    value = evaluate_exact(e, env)
    return value.to_integer() if value.is_integer() else value


def evaluate_wiener(e: Expr | str, env: SessionEnvironment | None = None, tolerance: float = 1e-12) -> WienerElement:
    """Value in the weighted Wiener algebra of the single prime the expression uses.

    Division by an element that is not a monomial goes through the certified
    inverse, so ``1/(5-K2)`` is a convergent series here.
    """
    env = env or SessionEnvironment()
    if isinstance(e, str):
        e = parse(e)

    def ev(x: Expr) -> WienerElement:
        if isinstance(x, Num):
            return WienerElement.constant(Fraction(x.value))
        if isinstance(x, (Name, FileRef)):
            try:
                return from_rational(GraphRational.lift(gi(_atom_graph(x, env))))
            except NotSingleNetwork as exc:
                raise EvaluationError(f"{to_text(x)} is not a power of a single prime graph") from exc
        if isinstance(x, Neg):
            return -ev(x.operand)
        if isinstance(x, Pow):
            b = ev(x.base)
            if x.exponent >= 0:
                return b**x.exponent
            return _invert(b, x.base, tolerance) ** (-x.exponent)
        a, b = ev(x.left), ev(x.right)
        if x.op == "+":
            return a + b
        if x.op == "-":
            return a - b
        if x.op == "*":
            return a * b
        return a * _invert(b, x.right, tolerance)

    try:
        return ev(e)
    except BaseMismatch as exc:
        raise EvaluationError(f"the expression mixes prime graphs: {exc}") from exc


def _invert(value: WienerElement, where: Expr, tolerance: float) -> WienerElement:
    if not value.coeffs:
        raise EvaluationError(f"division by zero in {to_text(where)}")
    if len(value.coeffs) == 1:
        (n, a), = value.coeffs
        return WienerElement.make(value.base, {-n: 1 / a})
    result = we_invert(value, tolerance)
    if not result.invertible:
        raise EvaluationError(
            f"{to_text(where)} = {value} is not invertible: its symbol vanishes near {result.witness}"
            if result.invertible is False
            else f"could not decide whether {to_text(where)} is invertible"
        )
    return result.inverse
