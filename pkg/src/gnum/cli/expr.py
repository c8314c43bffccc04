"""Tokenizer, parser and printer for graph arithmetic expressions.

Grammar (left-associative, ``^`` binds tightest)::

    sum     := product (("+" | "-") product)*
    product := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" exponent)*
    exponent:= "-"? INT | "(" "-"? INT ")"
    atom    := INT | NAME | "file:" PATH | "(" sum ")"

Graph names are K5, C4, P3, L4, S5 and Oct, plus user bindings.  A file
literal runs until whitespace, a parenthesis, ``+``, ``*`` or ``^``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Token:
    kind: str  # int | name | file | op | end
    text: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(?P<file>file:[^\s()+*^]+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# ---------------------------------------------------------------------------
# syntax tree; positions are kept for messages but ignored by equality


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Name:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class FileRef:
    path: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: int = field(default=0, compare=False)


Expr = Num | Name | FileRef | Neg | BinOp | Pow


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind != "op":
            raise ExprSyntaxError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        return self.take()

    def parse(self) -> Expr:
        e = self.sum()
        if self.tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def sum(self) -> Expr:
        e = self.product()
        while self.tok.kind == "op" and self.tok.text in "+-":
            t = self.take()
            e = BinOp(t.text, e, self.product(), t.pos)
        return e

    def product(self) -> Expr:
        e = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            t = self.take()
            e = BinOp(t.text, e, self.unary(), t.pos)
        return e

    def unary(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            t = self.take()
            return Neg(self.unary(), t.pos)
        return self.power()

    def power(self) -> Expr:
        e = self.atom()
        while self.tok.kind == "op" and self.tok.text == "^":
            t = self.take()
            e = Pow(e, self.exponent(), t.pos)
        return e

    def _signed_int(self) -> int:
        sign = 1
        if self.tok.kind == "op" and self.tok.text == "-":
            self.take()
            sign = -1
        if self.tok.kind != "int":
            raise ExprSyntaxError("exponents must be integers", self.tok.pos)
        return sign * int(self.take().text)

    def exponent(self) -> int:
        if self.tok.kind == "op" and self.tok.text == "(":
            self.take()
            k = self._signed_int()
            self.expect(")")
            return k
        return self._signed_int()

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "int":
            self.take()
            return Num(int(t.text), t.pos)
        if t.kind == "name":
            self.take()
            return Name(t.text, t.pos)
        if t.kind == "file":
            self.take()
            return FileRef(t.text[len("file:"):], t.pos)
        if t.kind == "op" and t.text == "(":
            self.take()
            e = self.sum()
            self.expect(")")
            return e
        raise ExprSyntaxError(f"expected a graph, number or '(' but found {t.text or 'end of input'!r}", t.pos)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def to_text(e: Expr) -> str:
    """Fully parenthesized form; parsing it gives back an equal tree."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Name):
        return e.name
    if isinstance(e, FileRef):
        return f"file:{e.path}"
    if isinstance(e, Neg):
        return f"(-{to_text(e.operand)})"
    if isinstance(e, Pow):
        exp = f"({e.exponent})" if e.exponent < 0 else str(e.exponent)
        return f"({to_text(e.base)}^{exp})"
    return f"({to_text(e.left)} {e.op} {to_text(e.right)})"


def count_nodes(e: Expr) -> dict[str, int]:
    """Atom and operator counts, handy for inspecting a parse."""
    counts = {"atoms": 0, "+": 0, "-": 0, "*": 0, "/": 0, "^": 0, "neg": 0}

    def walk(x: Expr) -> None:
        if isinstance(x, (Num, Name, FileRef)):
            counts["atoms"] += 1
        elif isinstance(x, Neg):
            counts["neg"] += 1
            walk(x.operand)
        elif isinstance(x, Pow):
            counts["^"] += 1
            walk(x.base)
        else:
            counts[x.op] += 1
            walk(x.left)
            walk(x.right)

    walk(e)
    return counts
