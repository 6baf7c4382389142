"""The ring R_a of rational functions with poles only at a_1..a_n (and infinity).

Elements are kept in partial-fraction canonical form::

    f = sum_k c_k t^k + sum_i sum_l d_{i,l} (t - a_i)^(-l)

Pole indices are 1-based throughout, matching the usual a_1..a_n notation.
Basis tags used by :func:`from_basis` and :meth:`RatFunc.terms` are an int
``k >= 0`` for t^k and a pair ``(i, -l)`` for (t - a_i)^(-l).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

from . import poly as P
from .errors import BadIndex, ConfigMismatch, DegenerateInput, DivisionByZero, ForeignPole, PoleEvaluation
from .field import FieldElement, FieldSpec

__all__ = [
    "PointConfig",
    "RatFunc",
    "PolyFraction",
    "from_basis",
    "rf_mul",
    "rf_derive",
    "rf_eval",
    "to_polyfraction",
    "from_polyfraction",
    "pf_mul",
    "unit_factor",
    "shifted_power",
    "rf_integrate",
]


@dataclass(frozen=True)
class PointConfig:
    """The marked points a_1..a_n, pairwise distinct, in one field."""

    field: FieldSpec
    points: tuple

    def __post_init__(self):
        pts = tuple(self.field.coerce(p) for p in self.points)
        if not pts:
            raise DegenerateInput("need at least one point")
        if len(set(pts)) != len(pts):
            raise DegenerateInput("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, i: int) -> FieldElement:
        self.check_index(i)
        return self.points[i - 1]

    def check_index(self, i):
        if not isinstance(i, int) or not 1 <= i <= len(self.points):
            raise BadIndex(f"pole index {i!r} outside 1..{len(self.points)}")

    @cached_property
    def _inv_diffs(self) -> dict:
        pts = self.points
        return {
            (i + 1, j + 1): (pts[i] - pts[j]).inverse()
            for i in range(len(pts))
            for j in range(len(pts))
            if i != j
        }

    def inv_diff(self, i: int, j: int) -> FieldElement:
        """1 / (a_i - a_j) for i != j."""
        return self._inv_diffs[(i, j)]

    def index_of(self, p: FieldElement) -> int | None:
        try:
            return self.points.index(p) + 1
        except ValueError:
            return None

    def __hash__(self):
        return hash((self.field, self.points))


class RatFunc:
    """Element of R_a in canonical partial-fraction form. Immutable."""

    __slots__ = ("config", "poly", "principal", "_hash")

    def __init__(self, config: PointConfig, poly=(), principal=None):
        self.config = config
        self.poly = P.trim(poly)
        parts = {}
        for i, coeffs in (principal or {}).items():
            config.check_index(i)
            coeffs = P.trim(coeffs)
            if coeffs:
                parts[i] = coeffs
        self.principal = dict(sorted(parts.items()))
        self._hash = None

    # -- constructors ----------------------------------------------------------
    @classmethod
    def zero(cls, config) -> RatFunc:
        return cls(config)

    @classmethod
    def constant(cls, config, c) -> RatFunc:
        return cls(config, (config.field.coerce(c),))

    @classmethod
    def t_power(cls, config, k: int, c=1) -> RatFunc:
        c = config.field.coerce(c)
        return cls(config, (config.field.zero,) * k + (c,))

    @classmethod
    def pole(cls, config, i: int, l: int, c=1) -> RatFunc:
        """c * (t - a_i)^(-l), l >= 1."""
        config.check_index(i)
        if l < 1:
            raise BadIndex(f"pole order must be >= 1, got {l}")
        c = config.field.coerce(c)
        return cls(config, (), {i: (config.field.zero,) * (l - 1) + (c,)})

    # -- structure -------------------------------------------------------------
    def terms(self):
        """Yield (tag, coefficient) over nonzero basis coefficients."""
        for k, c in enumerate(self.poly):
            if c:
                yield k, c
        for i, coeffs in self.principal.items():
            for l, c in enumerate(coeffs, start=1):
                if c:
                    yield (i, -l), c

    def coefficient(self, tag) -> FieldElement:
        zero = self.config.field.zero
        if isinstance(tag, int):
            return self.poly[tag] if 0 <= tag < len(self.poly) else zero
        i, neg = tag
        coeffs = self.principal.get(i, ())
        return coeffs[-neg - 1] if 1 <= -neg <= len(coeffs) else zero

    def residue(self, i: int) -> FieldElement:
        return self.coefficient((i, -1))

    def pole_order(self, i: int) -> int:
        return len(self.principal.get(i, ()))

    @property
    def poly_degree(self) -> int:
        return len(self.poly) - 1

    def is_zero(self) -> bool:
        return not self.poly and not self.principal

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------------
    def _check(self, other: RatFunc):
        if other.config is not self.config and other.config != self.config:
            raise ConfigMismatch("operands use different point configurations")

    def _lift(self, other):
        if isinstance(other, RatFunc):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
            return RatFunc.constant(self.config, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        parts = dict(self.principal)
        for i, coeffs in o.principal.items():
            parts[i] = P.add(parts.get(i, ()), coeffs)
        return RatFunc(self.config, P.add(self.poly, o.poly), parts)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> RatFunc:
        c = self.config.field.coerce(c)
        if not c:
            return RatFunc(self.config)
        return RatFunc(
            self.config,
            tuple(x * c for x in self.poly),
            {i: tuple(x * c for x in v) for i, v in self.principal.items()},
        )

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return rf_mul(self, other)
        if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = RatFunc.constant(self.config, 1)
        for _ in range(k):
            out = rf_mul(out, self)
        return out

    def derive(self) -> RatFunc:
        return rf_derive(self)

    def __call__(self, p) -> FieldElement:
        return rf_eval(self, p)

    # -- comparison / display --------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return (
                self.config == other.config
                and self.poly == other.poly
                and self.principal == other.principal
            )
        if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
            return self == RatFunc.constant(self.config, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.poly, tuple(self.principal.items())))
        return self._hash

    def to_text(self) -> str:
        """Render in the CLI expression grammar (round-trips through the parser)."""
        pieces = []
        for tag, c in self.terms():
            coeff = f"({c.to_text()})"
            if isinstance(tag, int):
                mono = "1" if tag == 0 else ("t" if tag == 1 else f"t^{tag}")
            else:
                i, neg = tag
                a = self.config.points[i - 1]
                base = "t" if not a else f"(t - ({a.to_text()}))"
                mono = f"{base}^{neg}"
            pieces.append(f"{coeff}*{mono}")
        return " + ".join(pieces) if pieces else "0"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RatFunc({self.to_text()!r})"


# -- basis construction ----------------------------------------------------------

def from_basis(config: PointConfig, terms) -> RatFunc:
    """Linear combination of basis elements.

    ``terms`` is a mapping or an iterable of (tag, coefficient) pairs.

    >>> from npvir.field import QQ
    >>> cfg = PointConfig(QQ, (0, 1))
    >>> str(from_basis(cfg, {2: 1, (1, -1): -3}))
    '(1)*t^2 + (-3)*t^-1'
    """
    items = terms.items() if hasattr(terms, "items") else terms
    field = config.field
    poly: dict[int, FieldElement] = {}
    parts: dict[int, dict[int, FieldElement]] = {}
    for tag, c in items:
        c = field.coerce(c)
        if isinstance(tag, int):
            if tag < 0:
                raise BadIndex(f"polynomial exponent must be >= 0, got {tag}")
            poly[tag] = poly.get(tag, field.zero) + c
        else:
            i, neg = tag
            config.check_index(i)
            if neg >= 0:
                raise BadIndex(f"pole exponent must be negative, got {neg}")
            slot = parts.setdefault(i, {})
            slot[-neg] = slot.get(-neg, field.zero) + c
    poly_t = _dense(poly, 0, field)
    principal = {i: _dense(v, 1, field) for i, v in parts.items()}
    return RatFunc(config, poly_t, principal)


def _dense(d: dict, start: int, field) -> tuple:
    if not d:
        return ()
    top = max(d)
    return tuple(d.get(k, field.zero) for k in range(start, top + 1))


def shifted_power(config: PointConfig, i: int, e: int, c=1) -> RatFunc:
    """c * (t - a_i)^e for any integer e."""
    if e < 0:
        return RatFunc.pole(config, i, -e, c)
    a = config.point(i)
    return RatFunc(config, P.scale(P.linear_power(a, e), config.field.coerce(c)))


# -- multiplication --------------------------------------------------------------

class _Acc:
    """Mutable accumulator for building a RatFunc with in-place additions."""

    __slots__ = ("config", "zero", "poly", "parts")

    def __init__(self, config):
        self.config = config
        self.zero = config.field.zero
        self.poly: list = []
        self.parts: dict[int, list] = {}

    def add_poly_coeff(self, k, c):
        if len(self.poly) <= k:
            self.poly.extend([self.zero] * (k + 1 - len(self.poly)))
        self.poly[k] = self.poly[k] + c

    def add_poly(self, p):
        for k, c in enumerate(p):
            if c:
                self.add_poly_coeff(k, c)

    def add_pole(self, i, l, c):
        slot = self.parts.setdefault(i, [])
        if len(slot) < l:
            slot.extend([self.zero] * (l - len(slot)))
        slot[l - 1] = slot[l - 1] + c

    def result(self) -> RatFunc:
        return RatFunc(self.config, self.poly, self.parts)


def _poly_times_principal(acc: _Acc, p, i: int, d):
    """Add p(t) * sum_l d_l (t - a_i)^(-l) into acc."""
    a = acc.config.points[i - 1]
    b = P.taylor_shift(p, a)  # p as polynomial in u = t - a_i
    upoly = [acc.zero] * max(len(b) - 1, 0)
    for j, bj in enumerate(b):
        if not bj:
            continue
        for l, dl in enumerate(d, start=1):
            if not dl:
                continue
            e = j - l
            if e < 0:
                acc.add_pole(i, -e, bj * dl)
            else:
                upoly[e] = upoly[e] + bj * dl
    if upoly:
        acc.add_poly(P.taylor_shift(P.trim(upoly), -a))


def _neg_binom(l: int, j: int) -> int:
    """binom(-l, j) = (-1)^j binom(l + j - 1, j); zero for j < 0."""
    if j < 0:
        return 0
    return (-1) ** j * comb(l + j - 1, j)


def _cross_poles(acc: _Acc, i: int, d, j: int, e):
    """Add (sum_k d_k (t-a_i)^-k) * (sum_l e_l (t-a_j)^-l), i != j, into acc.

    Uses (t-c)^-k (t-b)^-l = sum_{m<=k} binom(-l, k-m) (c-b)^(m-l-k) (t-c)^-m
                           + sum_{m<=l} binom(-k, l-m) (b-c)^(m-k-l) (t-b)^-m.
    """
    w = acc.config.inv_diff(i, j)  # 1/(a_i - a_j)
    top = len(d) + len(e)
    wpow = [acc.config.field.one]
    for _ in range(top):
        wpow.append(wpow[-1] * w)
    for k, dk in enumerate(d, start=1):
        if not dk:
            continue
        for l, el in enumerate(e, start=1):
            if not el:
                continue
            de = dk * el
            for m in range(1, k + 1):
                # (a_i - a_j)^(m-l-k) = w^(l+k-m)
                acc.add_pole(i, m, de * (_neg_binom(l, k - m) * wpow[l + k - m]))
            for m in range(1, l + 1):
                # (a_j - a_i)^(m-k-l) = (-w)^(k+l-m)
                sign = -1 if (k + l - m) % 2 else 1
                acc.add_pole(j, m, de * (sign * _neg_binom(k, l - m) * wpow[k + l - m]))


def rf_mul(f: RatFunc, g: RatFunc) -> RatFunc:
    f._check(g)
    acc = _Acc(f.config)
    acc.add_poly(P.mul(f.poly, g.poly))
    if f.poly:
        for i, d in g.principal.items():
            _poly_times_principal(acc, f.poly, i, d)
    if g.poly:
        for i, d in f.principal.items():
            _poly_times_principal(acc, g.poly, i, d)
    for i, d in f.principal.items():
        for j, e in g.principal.items():
            if i == j:
                for k, dk in enumerate(d, start=1):
                    if dk:
                        for l, el in enumerate(e, start=1):
                            if el:
                                acc.add_pole(i, k + l, dk * el)
            else:
                _cross_poles(acc, i, d, j, e)
    return acc.result()


def rf_derive(f: RatFunc) -> RatFunc:
    """Termwise d/dt: t^k -> k t^(k-1), (t-a_i)^-l -> -l (t-a_i)^(-l-1)."""
    zero = f.config.field.zero
    parts = {i: (zero,) + tuple(c * (-l) for l, c in enumerate(v, start=1)) for i, v in f.principal.items()}
    return RatFunc(f.config, P.derivative(f.poly), parts)


def rf_integrate(f: RatFunc) -> RatFunc:
    """Antiderivative with zero constant term; requires every residue to vanish."""
    for i in f.principal:
        if f.residue(i):
            raise ValueError(f"residue at a_{i} is nonzero; no antiderivative in R_a")
    poly = (f.config.field.zero,) + tuple(c / (k + 1) for k, c in enumerate(f.poly))
    parts = {}
    for i, v in f.principal.items():
        # (t-a)^-l -> (t-a)^(1-l) / (1-l), l >= 2
        parts[i] = tuple(v[l] / (-l) for l in range(1, len(v)))
    return RatFunc(f.config, poly, parts)


def rf_eval(f: RatFunc, p) -> FieldElement:
    cfg = f.config
    p = cfg.field.coerce(p)
    idx = cfg.index_of(p)
    if idx is not None and idx in f.principal:
        raise PoleEvaluation(f"f has a pole at {p}")
    val = P.evaluate(f.poly, p)
    for i, v in f.principal.items():
        x = (p - cfg.points[i - 1]).inverse()
        val = val + P.evaluate(v, x) * x
    return val


# -- numerator / denominator form ------------------------------------------------

@dataclass(frozen=True)
class PolyFraction:
    """numerator / prod_i (t - a_i)^(k_i)."""

    config: PointConfig
    numerator: tuple
    pole_orders: tuple

    def __post_init__(self):
        object.__setattr__(self, "numerator", P.trim(self.config.field.coerce(c) for c in self.numerator))
        orders = tuple(int(k) for k in self.pole_orders)
        if len(orders) != self.config.n or any(k < 0 for k in orders):
            raise ValueError("pole_orders must be n nonnegative integers")
        object.__setattr__(self, "pole_orders", orders)

    def normalized(self) -> PolyFraction:
        """Cancel common (t - a_i) factors between numerator and denominator."""
        num = self.numerator
        orders = list(self.pole_orders)
        if not num:
            return PolyFraction(self.config, (), (0,) * self.config.n)
        for idx, a in enumerate(self.config.points):
            while orders[idx] > 0:
                q, r = P.divide_linear(num, a)
                if r:
                    break
                num = q
                orders[idx] -= 1
        return PolyFraction(self.config, num, tuple(orders))


def pf_mul(p: PolyFraction, q: PolyFraction) -> PolyFraction:
    return PolyFraction(
        p.config,
        P.mul(p.numerator, q.numerator),
        tuple(a + b for a, b in zip(p.pole_orders, q.pole_orders)),
    ).normalized()


def _denominator(config, orders, skip=None) -> tuple:
    den = (config.field.one,)
    for idx, (a, k) in enumerate(zip(config.points, orders), start=1):
        if idx != skip and k:
            den = P.mul(den, P.linear_power(a, k))
    return den


def to_polyfraction(f: RatFunc) -> PolyFraction:
    cfg = f.config
    orders = tuple(f.pole_order(i) for i in range(1, cfg.n + 1))
    num = P.mul(f.poly, _denominator(cfg, orders))
    for i, v in f.principal.items():
        k = orders[i - 1]
        a = cfg.points[i - 1]
        # sum_l d_l (t - a)^(k - l) as a polynomial in u = t - a, then shift back
        local = P.taylor_shift(P.trim(tuple(reversed(v))), -a)
        num = P.add(num, P.mul(local, _denominator(cfg, orders, skip=i)))
    return PolyFraction(cfg, num, orders)


def _series_div(num, den, prec):
    """First ``prec`` coefficients of num/den as power series (den[0] != 0)."""
    inv0 = den[0].inverse()
    zero = den[0].spec.zero
    out = []
    for k in range(prec):
        acc = num[k] if k < len(num) else zero
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv0)
    return out


def from_polyfraction(pf: PolyFraction) -> RatFunc:
    pf = pf.normalized()
    cfg = pf.config
    if not pf.numerator:
        return RatFunc(cfg)
    den = _denominator(cfg, pf.pole_orders)
    quot, _ = P.divmod_poly(pf.numerator, den)
    parts = {}
    for i, k in enumerate(pf.pole_orders, start=1):
        if not k:
            continue
        a = cfg.points[i - 1]
        num_u = P.taylor_shift(pf.numerator, a)
        den_u = P.taylor_shift(_denominator(cfg, pf.pole_orders, skip=i), a)
        s = _series_div(num_u, den_u, k)
        # coefficient of (t - a)^(-m) is the order-(k - m) Taylor coefficient
        parts[i] = tuple(s[k - m] for m in range(1, k + 1))
    return RatFunc(cfg, quot, parts)


def from_numden(config: PointConfig, num, den) -> RatFunc:
    """Convert num/den (arbitrary polynomials) into R_a or raise ForeignPole."""
    num, den = P.trim(num), P.trim(den)
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return RatFunc(config)
    g = P.gcd(num, den)
    if len(g) > 1:
        num = P.divmod_poly(num, g)[0]
        den = P.divmod_poly(den, g)[0]
    orders = []
    for a in config.points:
        k = 0
        while len(den) > 1:
            q, r = P.divide_linear(den, a)
            if r:
                break
            den = q
            k += 1
        orders.append(k)
    if len(den) > 1:
        raise ForeignPole("denominator has a root outside the marked points")
    num = P.scale(num, den[0].inverse())
    return from_polyfraction(PolyFraction(config, num, tuple(orders)))


def unit_factor(f: RatFunc):
    """Return (c, exponents) if f = c * prod (t - a_i)^(k_i), else None."""
    if f.is_zero():
        return None
    pf = to_polyfraction(f)
    num = pf.numerator
    mult = []
    for a in f.config.points:
        m = 0
        while len(num) > 1:
            q, r = P.divide_linear(num, a)
            if r:
                break
            num = q
            m += 1
        mult.append(m)
    if len(num) != 1:
        return None
    return num[0], tuple(m - k for m, k in zip(mult, pf.pole_orders))


def unit_from_exponents(config: PointConfig, exponents, c=1) -> RatFunc:
    """c * prod_i (t - a_i)^(k_i)."""
    out = RatFunc.constant(config, c)
    for i, k in enumerate(exponents, start=1):
        if k:
            out = rf_mul(out, shifted_power(config, i, int(k)))
    return out
