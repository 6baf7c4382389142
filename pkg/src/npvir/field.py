"""Exact arithmetic in Q and in simple extensions Q(s) = Q[x]/(m(x)).

Rationals are :class:`fractions.Fraction`. A :class:`FieldSpec` holds the
monic modulus; a :class:`FieldElement` is a reduced polynomial in the
generator with rational coefficients. Irreducibility of the modulus is never
checked up front: a nontrivial gcd met while inverting raises
:class:`ReducibleModulus`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, ReducibleModulus, SpecMismatch

Rational = Fraction

__all__ = [
    "Rational",
    "FieldSpec",
    "FieldElement",
    "QQ",
    "field_add",
    "field_sub",
    "field_mul",
    "field_inv",
    "field_div",
    "is_rational_integer",
]


# -- dense polynomials over Q, coefficient lists low-to-high -------------------

def _qtrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _qsub(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]
    return _qtrim(out)


def _qmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _qtrim(out)


def _qdivmod(p, q):
    p = _qtrim(p)
    q = _qtrim(q)
    if not q:
        raise DivisionByZero("polynomial division by zero")
    if len(p) < len(q):
        return [], p
    quot = [Fraction(0)] * (len(p) - len(q) + 1)
    rem = list(p)
    lead = q[-1]
    for k in range(len(p) - len(q), -1, -1):
        c = rem[k + len(q) - 1] / lead
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                rem[k + j] -= c * b
    return _qtrim(quot), _qtrim(rem[: len(q) - 1])


def _qxgcd(a, b):
    """Return (g, u) with g = gcd(a, b) and u*a = g (mod b)."""
    r0, r1 = _qtrim(a), _qtrim(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        quo, rem = _qdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _qsub(s0, _qmul(quo, s1))
    return r0, s0


# -- field spec and elements ---------------------------------------------------

def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


@dataclass(frozen=True)
class FieldSpec:
    """Monic modulus m(x), coefficients low-to-high (last entry is 1).

    Degree one encodes plain Q; then the generator is the rational root of m.
    """

    modulus: tuple

    def __post_init__(self):
        mod = tuple(_to_fraction(c) for c in self.modulus)
        while len(mod) > 1 and mod[-1] == 0:
            mod = mod[:-1]
        if len(mod) < 2:
            raise ValueError("modulus must have degree >= 1")
        if mod[-1] != 1:
            raise ValueError("modulus must be monic")
        object.__setattr__(self, "modulus", mod)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def __call__(self, value) -> FieldElement:
        return self.coerce(value)

    def element(self, coeffs) -> FieldElement:
        """Element from generator-power coefficients (any length, reduced here)."""
        return FieldElement(self, _reduce(self, [_to_fraction(c) for c in coeffs]))

    def coerce(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatch("element belongs to a different field")
            return value
        return FieldElement(self, _reduce(self, [_to_fraction(value)]))

    @property
    def zero(self) -> FieldElement:
        return self.coerce(0)

    @property
    def one(self) -> FieldElement:
        return self.coerce(1)

    @property
    def gen(self) -> FieldElement:
        return self.element([0, 1])

    def __repr__(self):
        return f"FieldSpec({_format_qpoly(self.modulus, 's')})"


def _reduce(spec: FieldSpec, coeffs: list) -> tuple:
    d = spec.degree
    mod = spec.modulus
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[k]
        if c:
            base = k - d
            for j in range(d):
                if mod[j]:
                    coeffs[base + j] -= c * mod[j]
        coeffs[k] = Fraction(0)
    coeffs = coeffs[:d]
    coeffs += [Fraction(0)] * (d - len(coeffs))
    return tuple(coeffs)


def _format_qpoly(coeffs, var):
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if k == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class FieldElement:
    """Element of Q[x]/(m(x)); immutable, hashable, supports + - * / **."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple):
        # coeffs must already be reduced; use FieldSpec.element otherwise
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise SpecMismatch("operands belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.coerce(other)
        return None

    # arithmetic
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.spec, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if len(self.coeffs) == 1:
            return FieldElement(self.spec, (self.coeffs[0] * o.coeffs[0],))
        if not isinstance(other, FieldElement) or o.is_rational():
            c = o.coeffs[0]
            return FieldElement(self.spec, tuple(a * c for a in self.coeffs))
        if self.is_rational():
            c = self.coeffs[0]
            return FieldElement(self.spec, tuple(c * b for b in o.coeffs))
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return FieldElement(self.spec, _reduce(self.spec, prod))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if not any(self.coeffs):
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return FieldElement(self.spec, _reduce(self.spec, [1 / self.coeffs[0]]))
        g, u = _qxgcd(list(self.coeffs), list(self.spec.modulus))
        if len(g) > 1:
            raise ReducibleModulus(
                f"gcd with modulus has degree {len(g) - 1}: modulus is not irreducible"
            )
        return FieldElement(self.spec, _reduce(self.spec, [c / g[0] for c in u]))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.spec.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison
    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    # inspection
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def to_text(self) -> str:
        """Expression in the generator ``s``; parseable by the CLI grammar."""
        return _format_qpoly(_qtrim(self.coeffs), "s")

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"FieldElement({self.to_text()!r})"


QQ = FieldSpec((0, 1))


def _same(u: FieldElement, v: FieldElement):
    if u.spec != v.spec:
        raise SpecMismatch("operands belong to different fields")


def field_add(u: FieldElement, v: FieldElement) -> FieldElement:
    _same(u, v)
    return u + v


def field_sub(u: FieldElement, v: FieldElement) -> FieldElement:
    _same(u, v)
    return u - v


def field_mul(u: FieldElement, v: FieldElement) -> FieldElement:
    _same(u, v)
    return u * v


def field_inv(u: FieldElement) -> FieldElement:
    return u.inverse()


def field_div(u: FieldElement, v: FieldElement) -> FieldElement:
    _same(u, v)
    return u * v.inverse()


def is_rational_integer(u: FieldElement) -> bool:
    """True iff ``u`` is an ordinary integer (no generator component)."""
    return u.is_rational() and u.coeffs[0].denominator == 1
