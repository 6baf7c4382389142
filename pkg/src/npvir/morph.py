"""Isomorphisms and automorphisms of R_a and V_a via Moebius maps.

Convention: a :class:`Morphism` from ``source`` a to ``target`` b carries a
Moebius map m with m({inf} u b) = {inf} u a, and acts on functions by
substitution, f -> f o m, which sends R_a onto R_b. On derivations it acts by
f d -> (f o m) / m' d.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import comb

from .errors import ConfigMismatch, InfiniteGroup, UnexpectedGroup
from .field import FieldElement
from .liealg import Derivation
from .rfunc import PointConfig, RatFunc, rf_mul, shifted_power

__all__ = [
    "INFINITY",
    "MobiusMap",
    "Morphism",
    "GroupTable",
    "mobius_apply",
    "mobius_through",
    "classify_morphism",
    "find_isomorphisms",
    "apply_to_rfunc",
    "apply_to_deriv",
    "compose",
    "automorphism_group",
    "classify_group",
    "first_kind_subgroup",
    "second_kind_set",
    "iso_class_membership",
]


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return "INFINITY"


INFINITY = _Infinity()


@dataclass(frozen=True)
class MobiusMap:
    """t -> (p t + q) / (r t + s), scaled so the first nonzero coefficient is 1."""

    p: FieldElement
    q: FieldElement
    r: FieldElement
    s: FieldElement

    def __post_init__(self):
        coeffs = (self.p, self.q, self.r, self.s)
        if not (self.p * self.s - self.q * self.r):
            raise ValueError("degenerate Moebius map (zero determinant)")
        lead = next(c for c in coeffs if c)
        if lead != 1:
            inv = lead.inverse()
            for name, c in zip("pqrs", coeffs):
                object.__setattr__(self, name, c * inv)

    @classmethod
    def identity(cls, field) -> MobiusMap:
        return cls(field.one, field.zero, field.zero, field.one)

    @property
    def matrix(self) -> tuple:
        return (self.p, self.q, self.r, self.s)

    @property
    def det(self) -> FieldElement:
        return self.p * self.s - self.q * self.r

    def __matmul__(self, other: MobiusMap) -> MobiusMap:
        """Composition self o other (apply ``other`` first)."""
        p, q, r, s = self.matrix
        P, Q, R, S = other.matrix
        return MobiusMap(p * P + q * R, p * Q + q * S, r * P + s * R, r * Q + s * S)

    def inverse(self) -> MobiusMap:
        return MobiusMap(self.s, -self.q, -self.r, self.p)

    def __call__(self, z):
        return mobius_apply(self, z)


def mobius_apply(m: MobiusMap, z):
    """Apply m to a field element or INFINITY."""
    if z is INFINITY:
        return INFINITY if not m.r else m.p / m.r
    den = m.r * z + m.s
    if not den:
        return INFINITY
    return (m.p * z + m.q) / den


def _homog(z, field):
    return (field.one, field.zero) if z is INFINITY else (z, field.one)


def _from_standard(z1, z2, z3, field):
    """Matrix sending inf, 0, 1 to z1, z2, z3 (distinct points)."""
    (x1, y1), (x2, y2), (x3, y3) = (_homog(z, field) for z in (z1, z2, z3))
    # solve lam * v1 + mu * v2 = v3
    det = x1 * y2 - x2 * y1
    lam = (x3 * y2 - x2 * y3) / det
    mu = (x1 * y3 - x3 * y1) / det
    return (lam * x1, mu * x2, lam * y1, mu * y2)


def mobius_through(src, dst, field) -> MobiusMap:
    """The unique Moebius map with src[k] -> dst[k] for k = 0, 1, 2."""
    a, b, c, d = _from_standard(*src, field)
    A, B, C, D = _from_standard(*dst, field)
    # inverse of the source matrix via the adjugate
    ia, ib, ic, id_ = d, -b, -c, a
    return MobiusMap(A * ia + B * ic, A * ib + B * id_, C * ia + D * ic, C * ib + D * id_)


@dataclass(frozen=True)
class Morphism:
    """An isomorphism R_source -> R_target (equivalently V_source -> V_target).

    ``perm[i-1]`` is the index j with m(b_j) = a_i, except at the second-kind
    anchor ``i0`` where ``perm[i0-1]`` is the index of the pole of m. ``c`` is
    the constant of the closed forms: t - a_i -> c (t - b_perm(i)) for the
    first kind, t - a_i0 -> c / (t - b_perm(i0)) for the second kind.
    """

    source: PointConfig
    target: PointConfig
    map: MobiusMap
    kind: str
    perm: tuple
    c: FieldElement
    anchor: int | None = None

    def as_dict(self) -> dict:
        return {
            "matrix": list(self.map.matrix),
            "kind": self.kind,
            "perm": list(self.perm),
            "c": self.c,
            "anchor": self.anchor,
        }


def classify_morphism(source: PointConfig, target: PointConfig, m: MobiusMap) -> Morphism:
    index_a = {a: i for i, a in enumerate(source.points, start=1)}
    images = [mobius_apply(m, b) for b in target.points]
    perm = [0] * source.n
    if not m.r:
        for j, img in enumerate(images, start=1):
            perm[index_a[img] - 1] = j
        return Morphism(source, target, m, "first", tuple(perm), m.p / m.s)
    anchor = index_a[m.p / m.r]
    for j, img in enumerate(images, start=1):
        if img is INFINITY:
            perm[anchor - 1] = j
        else:
            perm[index_a[img] - 1] = j
    c = -m.det / (m.r * m.r)
    return Morphism(source, target, m, "second", tuple(perm), c, anchor)


def _marked(config: PointConfig) -> list:
    return [INFINITY, *config.points]


def find_isomorphisms(a: PointConfig, b: PointConfig) -> list[Morphism]:
    """Every isomorphism R_a -> R_b, each classified by kind.

    The source triple (inf, b_1, b_2) is fixed and sent to every ordered triple
    of {inf} u a; a candidate survives if it maps {inf} u b onto {inf} u a.
    """
    if a.field != b.field:
        raise ConfigMismatch("configurations live in different fields")
    if a.n != b.n:
        return []
    if a.n == 1:
        raise InfiniteGroup("n = 1: the isomorphisms form a continuous family")
    field = a.field
    sb = _marked(b)
    sa = _marked(a)
    target_set = set(sa)
    fixed = sb[:3]
    found = []
    for triple in permutations(sa, 3):
        m = mobius_through(fixed, triple, field)
        if all(mobius_apply(m, z) in target_set for z in sb[3:]):
            found.append(classify_morphism(a, b, m))
    return found


# -- action on functions and derivations -----------------------------------------

def _t_image(mor: Morphism) -> RatFunc:
    """Image of t under f -> f o m, as an element of R_target."""
    cfg = mor.target
    m = mor.map
    if mor.kind == "first":
        return RatFunc(cfg, (m.q / m.s, m.p / m.s))
    j0 = mor.perm[mor.anchor - 1]
    return shifted_power(cfg, j0, -1, mor.c) + mor.source.point(mor.anchor)


def _power_sum(base_const, base_pole: RatFunc, k: int, cfg) -> RatFunc:
    """(base_const + base_pole)^k by the binomial theorem."""
    out = RatFunc.zero(cfg)
    power = RatFunc.constant(cfg, 1)
    for j in range(k + 1):
        out = out + power.scale(comb(k, j) * base_const ** (k - j))
        if j < k:
            power = rf_mul(power, base_pole)
    return out


def apply_to_rfunc(mor: Morphism, f: RatFunc) -> RatFunc:
    """f o m, computed basiswise from the first/second-kind closed forms."""
    if f.config != mor.source:
        raise ConfigMismatch("function is not over the morphism's source")
    cfg = mor.target
    out = RatFunc.zero(cfg)
    if mor.kind == "first":
        c = mor.c
        shift = mor.map.q / mor.map.s
        lin = RatFunc(cfg, (cfg.field.zero, c))
        for k in range(len(f.poly)):
            if f.poly[k]:
                out = out + _power_sum(shift, lin, k, cfg).scale(f.poly[k])
        for i, coeffs in f.principal.items():
            j = mor.perm[i - 1]
            for l, d in enumerate(coeffs, start=1):
                if d:
                    # (t - a_i)^-l -> c^-l (t - b_j)^-l
                    out = out + RatFunc.pole(cfg, j, l, d * c ** (-l))
        return out

    i0 = mor.anchor
    j0 = mor.perm[i0 - 1]
    c = mor.c
    a = mor.source.points
    # t = (t - a_i0) + a_i0 -> c (t - b_j0)^-1 + a_i0
    inv_pole = shifted_power(cfg, j0, -1, c)
    for k in range(len(f.poly)):
        if f.poly[k]:
            out = out + _power_sum(a[i0 - 1], inv_pole, k, cfg).scale(f.poly[k])
    for i, coeffs in f.principal.items():
        for l, d in enumerate(coeffs, start=1):
            if not d:
                continue
            if i == i0:
                # (t - a_i0)^-l -> c^-l (t - b_j0)^l
                out = out + shifted_power(cfg, j0, l, d * c ** (-l))
            else:
                # (t - a_i)^-l -> (a_i0 - a_i)^-l (t - b_j0)^l (t - b_perm(i))^-l
                j = mor.perm[i - 1]
                term = rf_mul(shifted_power(cfg, j0, l), RatFunc.pole(cfg, j, l))
                out = out + term.scale(d * (a[i0 - 1] - a[i - 1]) ** (-l))
    return out


def apply_to_deriv(mor: Morphism, x: Derivation) -> Derivation:
    """f d -> (f o m) / m' d."""
    image = apply_to_rfunc(mor, x.coeff)
    cfg = mor.target
    if mor.kind == "first":
        return Derivation(image.scale(mor.c.inverse()))
    j0 = mor.perm[mor.anchor - 1]
    factor = shifted_power(cfg, j0, 2, -mor.c.inverse())
    return Derivation(rf_mul(image, factor))


def compose(g: Morphism, h: Morphism) -> Morphism:
    """Ring-map composition g o h (h applied first); kind is recomputed from the matrix."""
    if h.target != g.source:
        raise ConfigMismatch("morphisms are not composable")
    return classify_morphism(h.source, g.target, h.map @ g.map)


# -- groups ----------------------------------------------------------------------

@dataclass
class GroupTable:
    elements: list
    mul: list
    label: str | None = None
    identity: int = 0

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, idx: int) -> int:
        k, cur = 1, idx
        while cur != self.identity:
            cur = self.mul[cur][idx]
            k += 1
            if k > len(self.elements):
                raise UnexpectedGroup("element of unbounded order: table is not a group")
        return k

    def element_orders(self) -> list:
        return [self.element_order(i) for i in range(len(self.elements))]


def _table(elements: list) -> GroupTable:
    index = {e.map: i for i, e in enumerate(elements)}
    # g o h acts by the matrix product h.map @ g.map; kinds are not needed here
    mul = [[index[h.map @ g.map] for h in elements] for g in elements]
    ident = next(i for i, e in enumerate(elements) if e.map == MobiusMap.identity(e.source.field))
    return GroupTable(list(elements), mul, identity=ident)


def classify_group(table, identity: int | None = None) -> str:
    """Name a finite group from Klein's list by its order and element-order multiset.

    ``table`` is a GroupTable or a square multiplication table (list of rows).
    """
    if not isinstance(table, GroupTable):
        rows = list(table)
        if identity is None:
            identity = next(i for i, row in enumerate(rows) if row == list(range(len(rows))))
        table = GroupTable(list(range(len(rows))), rows, identity=identity)
    n = table.order
    counts = Counter(table.element_orders())
    if counts.get(n):
        return f"C{n}"
    if n == 4 and counts == Counter({1: 1, 2: 3}):
        return "D2"
    if n % 2 == 0 and n >= 6:
        half = n // 2
        if counts.get(half) and counts.get(2, 0) >= half:
            return f"D{half}"
    if n == 12 and counts == Counter({1: 1, 2: 3, 3: 8}):
        return "A4"
    if n == 24 and counts == Counter({1: 1, 2: 9, 3: 8, 4: 6}):
        return "S4"
    if n == 60 and counts == Counter({1: 1, 2: 15, 3: 20, 5: 24}):
        return "A5"
    raise UnexpectedGroup(f"order {n} with element orders {dict(counts)} is not in Klein's list")


def automorphism_group(a: PointConfig) -> GroupTable:
    if a.n == 1:
        raise InfiniteGroup("n = 1: Aut is C^* x Z/2Z")
    table = _table(find_isomorphisms(a, a))
    table.label = classify_group(table)
    return table


def first_kind_subgroup(a: PointConfig) -> GroupTable:
    group = automorphism_group(a)
    sub = [e for e in group.elements if e.kind == "first"]
    table = _table(sub)
    table.label = classify_group(table)
    return table


def second_kind_set(a: PointConfig) -> list[tuple]:
    """All (i, i', c) with {c/(a_j - a_i) : j != i} = {a_j - a_i' : j != i'}."""
    pts = a.points
    n = a.n
    out = []
    for i in range(n):
        left = [pts[j] - pts[i] for j in range(n) if j != i]
        for ip in range(n):
            right = {pts[j] - pts[ip] for j in range(n) if j != ip}
            seen = set()
            for cand in right:
                c = cand * left[0]
                if c in seen:
                    continue
                seen.add(c)
                if {c / d for d in left} == right:
                    out.append((i + 1, ip + 1, c))
    return out


def iso_class_membership(a: PointConfig, b: PointConfig) -> dict:
    """Whether b is reachable from a by a first-kind and/or second-kind isomorphism."""
    if a.n != b.n:
        return {"first": False, "second": False, "isomorphic": False}
    if a.n == 1:
        return {"first": True, "second": True, "isomorphic": True}
    kinds = {m.kind for m in find_isomorphisms(a, b)}
    return {"first": "first" in kinds, "second": "second" in kinds, "isomorphic": bool(kinds)}
