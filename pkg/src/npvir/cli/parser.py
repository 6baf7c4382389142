"""Expression grammar shared by every CLI argument.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' exponent)?
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom   := INT | 's' | 't' | '(' expr ')'

``^`` binds tighter than unary minus, so ``-t^2`` is ``-(t^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .. import poly as P
from ..errors import DivisionByZero, ParseError
from ..field import QQ, FieldElement, FieldSpec
from ..rfunc import PointConfig, RatFunc, from_numden

__all__ = [
    "Num", "Sym", "Neg", "BinOp", "Pow",
    "parse_expr", "lower_to_field", "lower_to_modulus", "lower_to_rfunc", "parse_points",
]


@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([st])|([-+*/^()])|(−))")


def _tokenize(text: str):
    pos, out = 0, []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("sym", m.group(2), start))
        else:
            # U+2212 is accepted as a minus sign
            out.append(("op", m.group(3) or "-", start))
        pos = m.end()
    out.append(("end", None, n))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def at(self, *ops):
        kind, val, _ = self.peek()
        return kind == "op" and val in ops

    def expr(self):
        node = self.term()
        while self.at("+", "-"):
            _, op, pos = self.take()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.unary()
        while self.at("*", "/"):
            _, op, pos = self.take()
            node = BinOp(op, node, self.unary(), pos)
        return node

    def unary(self):
        if self.at("-"):
            _, _, pos = self.take()
            return Neg(self.unary(), pos)
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            _, _, pos = self.take()
            return Pow(base, self.exponent(), pos)
        return base

    def exponent(self):
        paren = self.at("(")
        if paren:
            self.take()
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("exponent must be an integer literal", pos)
        if paren:
            self.expect(")")
        return sign * val

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Num(val, pos)
        if kind == "sym":
            return Sym(val, pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_expr(text: str):
    p = _Parser(text)
    node = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return node


# -- lowering ----------------------------------------------------------------------

class _Arith:
    """Generic evaluator; subclasses supply leaves and the four operations."""

    def run(self, node):
        if isinstance(node, Num):
            return self.num(node.value)
        if isinstance(node, Sym):
            return self.sym(node)
        if isinstance(node, Neg):
            return self.neg(self.run(node.arg))
        if isinstance(node, Pow):
            return self.pow(self.run(node.base), node.exp, node)
        left, right = self.run(node.left), self.run(node.right)
        if node.op == "+":
            return self.add(left, right)
        if node.op == "-":
            return self.add(left, self.neg(right))
        if node.op == "*":
            return self.mul(left, right)
        return self.div(left, right, node)


class _FieldEval(_Arith):
    def __init__(self, spec: FieldSpec):
        self.spec = spec

    def num(self, v):
        return self.spec.coerce(v)

    def sym(self, node):
        if node.name == "t":
            raise ParseError("'t' is not allowed in a field element", node.pos)
        return self.spec.gen

    def neg(self, x):
        return -x

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def div(self, x, y, node):
        if not y:
            raise DivisionByZero(f"division by zero at position {node.pos}")
        return x / y

    def pow(self, x, e, node):
        if e < 0 and not x:
            raise DivisionByZero(f"zero to a negative power at position {node.pos}")
        return x**e


class _QPolyEval(_Arith):
    """Polynomials in s over Q, used for the modulus."""

    def num(self, v):
        return P.trim((QQ.coerce(v),))

    def sym(self, node):
        if node.name == "t":
            raise ParseError("'t' is not allowed in a modulus", node.pos)
        return (QQ.zero, QQ.one)

    def neg(self, x):
        return P.scale(x, -1)

    def add(self, x, y):
        return P.add(x, y)

    def mul(self, x, y):
        return P.mul(x, y)

    def div(self, x, y, node):
        if len(y) != 1:
            raise ParseError("modulus may only be divided by nonzero constants", node.pos)
        return P.scale(x, y[0].inverse())

    def pow(self, x, e, node):
        if e < 0:
            raise ParseError("negative exponent in a modulus", node.pos)
        return P.power(x, e, QQ)


class _RatEval(_Arith):
    """Quotients num/den of polynomials in t with coefficients in the field."""

    def __init__(self, config: PointConfig):
        self.field = config.field

    def _norm(self, num, den):
        num, den = P.trim(num), P.trim(den)
        if not num:
            return (), (self.field.one,)
        g = P.gcd(num, den)
        if len(g) > 1:
            num, den = P.divmod_poly(num, g)[0], P.divmod_poly(den, g)[0]
        lead = den[-1].inverse()
        return P.scale(num, lead), P.scale(den, lead)

    def num(self, v):
        return P.trim((self.field.coerce(v),)), (self.field.one,)

    def sym(self, node):
        if node.name == "t":
            return (self.field.zero, self.field.one), (self.field.one,)
        return (self.field.gen,), (self.field.one,)

    def neg(self, x):
        return P.scale(x[0], -1), x[1]

    def add(self, x, y):
        if x[1] == y[1]:
            return self._norm(P.add(x[0], y[0]), x[1])
        return self._norm(P.add(P.mul(x[0], y[1]), P.mul(y[0], x[1])), P.mul(x[1], y[1]))

    def mul(self, x, y):
        return self._norm(P.mul(x[0], y[0]), P.mul(x[1], y[1]))

    def div(self, x, y, node):
        if not y[0]:
            raise DivisionByZero(f"division by the zero function at position {node.pos}")
        return self._norm(P.mul(x[0], y[1]), P.mul(x[1], y[0]))

    def pow(self, x, e, node):
        num, den = x
        if e < 0:
            if not num:
                raise DivisionByZero(f"zero to a negative power at position {node.pos}")
            num, den, e = den, num, -e
        return self._norm(P.power(num, e, self.field), P.power(den, e, self.field))


def _tree(e):
    return parse_expr(e) if isinstance(e, str) else e


def lower_to_field(e, spec: FieldSpec) -> FieldElement:
    return _FieldEval(spec).run(_tree(e))


def lower_to_modulus(e) -> FieldSpec:
    """Parse a monic polynomial in s; ``"s - 0"`` gives plain Q."""
    coeffs = _QPolyEval().run(_tree(e))
    if len(coeffs) < 2:
        raise ParseError("modulus must have degree >= 1", 0)
    if coeffs[-1] != 1:
        raise ParseError("modulus must be monic", 0)
    return FieldSpec(tuple(c.to_fraction() for c in coeffs))


def lower_to_rfunc(e, config: PointConfig) -> RatFunc:
    num, den = _RatEval(config).run(_tree(e))
    return from_numden(config, num, den)


def parse_points(text: str, spec: FieldSpec) -> tuple:
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ParseError("points must be a comma-separated list of expressions", 0)
    return tuple(lower_to_field(p, spec) for p in parts)
