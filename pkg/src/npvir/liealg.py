"""The Lie algebra V_a = R_a d/dt, its 2-cocycles and the central extension.

Cocycles are evaluated bilinearly over the partial-fraction basis; nothing is
materialised as a matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import BadIndex, BadParameters, ConfigMismatch, DegenerateInput
from .field import FieldElement
from .rfunc import PointConfig, RatFunc, rf_derive, rf_mul, shifted_power

__all__ = [
    "Derivation",
    "ExtElement",
    "binom",
    "bracket",
    "bracket_basis_positive",
    "bracket_basis_negative",
    "cocycle_phi",
    "cocycle_separating",
    "ext_bracket",
    "verify_identity_cor21",
    "verify_identity_cor41",
]


def binom(p: int, q: int) -> int:
    """Generalised binomial coefficient: 0 for q < 0, falling factorial otherwise.

    Negative upper index is allowed, so binom(m - 1, m) is 1 at m = 0 and 0 for m > 0.
    """
    if q < 0:
        return 0
    if p >= 0:
        return comb(p, q)
    return (-1) ** q * comb(q - p - 1, q)


@dataclass(frozen=True)
class Derivation:
    """coeff * d/dt."""

    coeff: RatFunc

    @property
    def config(self) -> PointConfig:
        return self.coeff.config

    @classmethod
    def of(cls, f: RatFunc) -> Derivation:
        return cls(f)

    def __add__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return Derivation(self.coeff + other.coeff)

    def __sub__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return Derivation(self.coeff - other.coeff)

    def __neg__(self):
        return Derivation(-self.coeff)

    def __mul__(self, c):
        if isinstance(c, (Derivation, RatFunc)):
            return NotImplemented
        return Derivation(self.coeff.scale(c))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def to_text(self) -> str:
        return f"({self.coeff.to_text()})*d"

    def __repr__(self):
        return f"Derivation({self.coeff.to_text()!r})"


def bracket(x: Derivation, y: Derivation) -> Derivation:
    """[f d, g d] = (f g' - g f') d."""
    f, g = x.coeff, y.coeff
    if f.config != g.config:
        raise ConfigMismatch("bracket of derivations over different configurations")
    return Derivation(rf_mul(f, rf_derive(g)) - rf_mul(g, rf_derive(f)))


def _require_distinct(config: PointConfig, i: int, j: int):
    config.check_index(i)
    config.check_index(j)
    if i == j:
        raise BadIndex("closed-form bracket needs i != j")


def bracket_basis_positive(config: PointConfig, i: int, k: int, j: int, m: int) -> Derivation:
    """[(t-a_i)^k d, (t-a_j)^m d] for k >= 0, any integer m, i != j."""
    _require_distinct(config, i, j)
    if k < 0:
        raise BadParameters("k must be >= 0")
    diff = config.point(j) - config.point(i)
    out = RatFunc.zero(config)
    for s in range(k + 1):
        c = comb(k, s) * (m + s - k)
        if c:
            out = out + shifted_power(config, j, k + m - s - 1, c * diff**s)
    return Derivation(out)


def bracket_basis_negative(config: PointConfig, i: int, k: int, j: int, l: int) -> Derivation:
    """[(t-a_i)^-k d, (t-a_j)^-l d] for k, l >= 1, i != j, as the double-sum closed form."""
    _require_distinct(config, i, j)
    if k < 1 or l < 1:
        raise BadParameters("k and l must be >= 1")
    dij = config.point(i) - config.point(j)
    dji = -dij
    out = RatFunc.zero(config)
    for m in range(1, k + 2):
        c = (2 * k + 1 - m) * binom(k + l - m, k + 1 - m)
        if c:
            out = out + RatFunc.pole(config, i, m, c / (dij**l * dji ** (k + 1 - m)))
    for m in range(1, l + 2):
        c = (2 * l + 1 - m) * binom(l + k - m, l + 1 - m)
        if c:
            out = out - RatFunc.pole(config, j, m, c / (dji**k * dij ** (l + 1 - m)))
    return Derivation(out)


# -- 2-cocycles ------------------------------------------------------------------

@lru_cache(maxsize=65536)
def _phi_basis(config: PointConfig, i: int, x_tag, y_tag) -> FieldElement | None:
    """phi_i on an ordered pair of basis derivations; None encodes zero."""
    x_poly = isinstance(x_tag, int)
    y_poly = isinstance(y_tag, int)
    if x_poly and y_poly:
        return None
    if not x_poly and not y_poly:
        (p, negk), (q, negl) = x_tag, y_tag
        if p == q:
            return None
        if p == i:
            k, l, ai, aj = -negk, -negl, config.points[i - 1], config.points[q - 1]
            num = factorial(k + l + 1) // (factorial(k - 1) * factorial(l - 1))
            return config.field.coerce(num) / ((aj - ai) ** (k + 1) * (ai - aj) ** (l + 1))
        if q == i:
            v = _phi_basis(config, i, y_tag, x_tag)
            return None if v is None else -v
        return None
    if not x_poly:
        v = _phi_basis(config, i, y_tag, x_tag)
        return None if v is None else -v
    # x = t^K d, y = (t - a_j)^-L d
    K = x_tag
    j, negL = y_tag
    if j != i:
        return None
    L = -negL
    # first line of the defining formula with k = K - 1, l = L + 1; 0^0 = 1 covers a_i = 0
    lval = L + 1
    if K < L + 2:
        return None
    val = comb(K, L + 2) * (lval**3 - lval)
    return config.points[i - 1] ** (K - L - 2) * val


def cocycle_phi(i: int, x: Derivation, y: Derivation) -> FieldElement:
    """phi_i(x, y), extended bilinearly from the basis values."""
    config = x.config
    if y.config != config:
        raise ConfigMismatch("cocycle arguments over different configurations")
    config.check_index(i)
    total = config.field.zero
    yterms = list(y.coeff.terms())
    for xt, xc in x.coeff.terms():
        for yt, yc in yterms:
            v = _phi_basis(config, i, xt, yt)
            if v is not None and v:
                total = total + xc * yc * v
    return total


def cocycle_separating(x: Derivation, y: Derivation) -> FieldElement:
    """phi = sum_i phi_i."""
    total = x.config.field.zero
    for i in range(1, x.config.n + 1):
        total = total + cocycle_phi(i, x, y)
    return total


@dataclass(frozen=True)
class ExtElement:
    """deriv + sum_i central[i-1] c_i in the centrally extended algebra."""

    deriv: Derivation
    central: tuple

    def __post_init__(self):
        cfg = self.deriv.config
        central = tuple(cfg.field.coerce(c) for c in self.central)
        if len(central) != cfg.n:
            raise ValueError(f"central part must have length {cfg.n}")
        object.__setattr__(self, "central", central)

    @classmethod
    def lift(cls, x: Derivation) -> ExtElement:
        return cls(x, (0,) * x.config.n)

    @classmethod
    def central_basis(cls, config: PointConfig, i: int) -> ExtElement:
        config.check_index(i)
        return cls(Derivation(RatFunc.zero(config)), tuple(int(k == i) for k in range(1, config.n + 1)))

    def __add__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return ExtElement(self.deriv + other.deriv, tuple(a + b for a, b in zip(self.central, other.central)))

    def __sub__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return ExtElement(self.deriv - other.deriv, tuple(a - b for a, b in zip(self.central, other.central)))

    def __neg__(self):
        return ExtElement(-self.deriv, tuple(-a for a in self.central))

    def is_zero(self) -> bool:
        return self.deriv.is_zero() and not any(self.central)


def ext_bracket(x: ExtElement, y: ExtElement) -> ExtElement:
    """[f d + x.c, g d + y.c] = [f d, g d] + sum_i phi_i(f d, g d) c_i."""
    cfg = x.deriv.config
    if y.deriv.config != cfg:
        raise ConfigMismatch("bracket of elements over different configurations")
    central = tuple(cocycle_phi(i, x.deriv, y.deriv) for i in range(1, cfg.n + 1))
    return ExtElement(bracket(x.deriv, y.deriv), central)


# -- combinatorial identities ----------------------------------------------------

def verify_identity_cor21(x, y, z, m: int, k: int, l: int, r: int) -> bool:
    """Four-sum identity obtained from the Jacobi identity on three pole families.

    Evaluated directly from the sums; no brackets are computed.
    """
    if x == y or y == z or x == z:
        raise DegenerateInput("x, y, z must be pairwise distinct")
    if min(m, k, l) < 1 or not 1 <= r <= m + 1:
        raise BadParameters("need m, k, l >= 1 and 1 <= r <= m + 1")
    one = x.spec.one
    lhs = x.spec.zero
    for s in range(1, k + 2):
        c = binom(k + l - s, k + 1 - s) * binom(m + s - r, m + 1 - r) * (-1) ** (l + s)
        c *= (2 * k + 1 - s) * (2 * m + 1 - r)
        if c:
            lhs = lhs + one * c / ((z - y) ** (l + k + 1 - s) * (y - x) ** (m + s + 1 - r))
    for s in range(1, l + 2):
        c = binom(l + k - s, l + 1 - s) * binom(m + s - r, m + 1 - r) * (-1) ** (k + s)
        c *= (2 * l + 1 - s) * (2 * m + 1 - r)
        if c:
            lhs = lhs - one * c / ((y - z) ** (l + k + 1 - s) * (z - x) ** (m + s + 1 - r))
    rhs = x.spec.zero
    sign = (-1) ** (k + l)
    for s in range(r - 1, m + 2):
        c = binom(m + k - s, m + 1 - s) * binom(s + l - r, s + 1 - r) * sign
        c *= (2 * m + 1 - s) * (2 * s + 1 - r)
        if c:
            rhs = rhs + one * c / ((y - x) ** (k + m + 1 - s) * (z - x) ** (l + s + 1 - r))
        c = binom(m + l - s, m + 1 - s) * binom(s + k - r, s + 1 - r) * sign
        c *= (2 * m + 1 - s) * (2 * s + 1 - r)
        if c:
            rhs = rhs - one * c / ((z - x) ** (l + m + 1 - s) * (y - x) ** (k + s + 1 - r))
    return lhs == rhs


def verify_identity_cor41(x, y, k: int, l: int, m: int) -> bool:
    """Two-sum identity from the separating cocycle, valid for 1 <= m < k + l + 3.

    The weight attached to index s is (s+1)^3 - (s+1), the cocycle value on
    (t^m d, (t-x)^-s d); with a bare (s+1)^3 the sums do not cancel.
    """
    if k < 1 or l < 1 or not 1 <= m < k + l + 3:
        raise BadParameters("need k, l >= 1 and 1 <= m < k + l + 3")
    if x == y:
        return True
    total = x.spec.zero
    for s in range(1, k + 2):
        c = binom(k + l - s, k + 1 - s) * binom(m, s + 2) * (2 * k + 1 - s) * ((s + 1) ** 3 - (s + 1))
        if c:
            total = total + (y - x) ** s * x ** (m - s - 2) * c
    for s in range(1, l + 2):
        c = binom(l + k - s, l + 1 - s) * binom(m, s + 2) * (2 * l + 1 - s) * ((s + 1) ** 3 - (s + 1))
        if c:
            total = total + (x - y) ** s * y ** (m - s - 2) * c
    return not total
