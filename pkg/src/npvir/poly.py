"""Dense univariate polynomials over a FieldSpec.

A polynomial is a tuple of FieldElement, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from math import comb

from .errors import DivisionByZero
from .field import FieldElement, FieldSpec


def trim(p) -> tuple:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def degree(p) -> int:
    return len(p) - 1


def add(p, q) -> tuple:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, b in enumerate(q):
        out[i] = out[i] + b
    return trim(out)


def sub(p, q) -> tuple:
    return add(p, scale(q, -1))


def scale(p, c) -> tuple:
    if not c:
        return ()
    return trim(a * c for a in p)


def mul(p, q) -> tuple:
    if not p or not q:
        return ()
    zero = p[0].spec.zero
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return trim(out)


def power(p, k: int, spec: FieldSpec) -> tuple:
    out = (spec.one,)
    for _ in range(k):
        out = mul(out, p)
    return out


def divmod_poly(p, q) -> tuple[tuple, tuple]:
    if not q:
        raise DivisionByZero("polynomial division by zero")
    if len(p) < len(q):
        return (), tuple(p)
    inv_lead = q[-1].inverse()
    rem = list(p)
    quot = [None] * (len(p) - len(q) + 1)
    for k in range(len(p) - len(q), -1, -1):
        c = rem[k + len(q) - 1] * inv_lead
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                rem[k + j] = rem[k + j] - c * b
    return trim(quot), trim(rem[: len(q) - 1])


def monic(p) -> tuple:
    if not p:
        return ()
    return scale(p, p[-1].inverse())


def gcd(p, q) -> tuple:
    """Monic gcd (empty tuple for gcd(0, 0))."""
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def derivative(p) -> tuple:
    return trim(c * k for k, c in enumerate(p) if k)


def evaluate(p, x: FieldElement) -> FieldElement:
    acc = x.spec.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def taylor_shift(p, a: FieldElement) -> tuple:
    """Coefficients of p(u + a) in u."""
    if not p:
        return ()
    out = list(p)
    n = len(out)
    # repeated synthetic division by (u - a), Horner-style
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = out[j] + a * out[j + 1]
    return trim(out)


def linear_power(a: FieldElement, k: int) -> tuple:
    """Coefficients of (t - a)^k for k >= 0."""
    return trim(comb(k, j) * (-a) ** (k - j) for j in range(k + 1))


def divide_linear(p, a: FieldElement) -> tuple[tuple, FieldElement]:
    """Synthetic division of p by (t - a); returns (quotient, remainder)."""
    if not p:
        return (), a.spec.zero
    acc = a.spec.zero
    out = []
    for c in reversed(p):
        acc = acc * a + c
        out.append(acc)
    remainder = out.pop()
    return trim(reversed(out)), remainder


