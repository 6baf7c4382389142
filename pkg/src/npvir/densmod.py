"""Density modules V(alpha, beta) = R_a z over the derivation algebra V_a.

The action is (f d).(g z) = (f g' + f g sigma + beta f' g) z, where
sigma = sum_j alpha_j / (t - a_j) is the logarithmic derivative of z.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import linsolve
from .errors import ConfigMismatch, NotApplicable
from .field import FieldElement, is_rational_integer
from .liealg import Derivation
from .rfunc import PointConfig, RatFunc, rf_derive, rf_integrate, rf_mul, unit_from_exponents

__all__ = [
    "DensityParams",
    "DensityElement",
    "Irreducibility",
    "REDUCIBLE_BETA0_ALPHA_INTEGRAL",
    "REDUCIBLE_BETA1_N_GE_2",
    "REDUCIBLE_BETA1_N1_ALPHA_INTEGRAL",
    "IRREDUCIBLE",
    "sigma",
    "act",
    "is_irreducible",
    "trivial_submodule_generator",
    "partial_image",
    "in_partial_image",
    "theorem51d_iso",
    "residue_functionals",
]

REDUCIBLE_BETA0_ALPHA_INTEGRAL = "beta0_alpha_integral"
REDUCIBLE_BETA1_N_GE_2 = "beta1_n_ge_2"
REDUCIBLE_BETA1_N1_ALPHA_INTEGRAL = "beta1_n1_alpha_integral"
IRREDUCIBLE = "irreducible"


@dataclass(frozen=True)
class DensityParams:
    config: PointConfig
    alpha: tuple
    beta: FieldElement

    def __post_init__(self):
        f = self.config.field
        alpha = tuple(f.coerce(x) for x in self.alpha)
        if len(alpha) != self.config.n:
            raise ValueError(f"alpha must have length {self.config.n}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", f.coerce(self.beta))

    @property
    def alpha_integral(self) -> bool:
        return all(is_rational_integer(x) for x in self.alpha)

    def element(self, g: RatFunc) -> DensityElement:
        return DensityElement(self, g)


@dataclass(frozen=True)
class DensityElement:
    """g z in V(alpha, beta)."""

    params: DensityParams
    g: RatFunc

    def __add__(self, other):
        if not isinstance(other, DensityElement):
            return NotImplemented
        _same(self.params, other.params)
        return DensityElement(self.params, self.g + other.g)

    def __sub__(self, other):
        if not isinstance(other, DensityElement):
            return NotImplemented
        _same(self.params, other.params)
        return DensityElement(self.params, self.g - other.g)

    def __neg__(self):
        return DensityElement(self.params, -self.g)

    def scale(self, c) -> DensityElement:
        return DensityElement(self.params, self.g.scale(c))

    def is_zero(self) -> bool:
        return self.g.is_zero()


def _same(p: DensityParams, q: DensityParams):
    if p != q:
        raise ConfigMismatch("density elements from different modules")


def sigma(params: DensityParams) -> RatFunc:
    cfg = params.config
    return RatFunc(cfg, (), {i: (a,) for i, a in enumerate(params.alpha, start=1) if a})


def _log_derivative_image(params: DensityParams, g: RatFunc) -> RatFunc:
    """Coefficient of d(g z) = (g' + g sigma) z."""
    return rf_derive(g) + rf_mul(g, sigma(params))


def act(x: Derivation, v: DensityElement) -> DensityElement:
    params = v.params
    if x.config != params.config:
        raise ConfigMismatch("derivation and module use different configurations")
    f, g = x.coeff, v.g
    out = rf_mul(f, _log_derivative_image(params, g))
    if params.beta:
        out = out + rf_mul(rf_derive(f), g).scale(params.beta)
    return DensityElement(params, out)


@dataclass(frozen=True)
class Irreducibility:
    irreducible: bool
    reason: str

    def __bool__(self):
        return self.irreducible


def is_irreducible(params: DensityParams) -> Irreducibility:
    beta = params.beta
    n = params.config.n
    if not beta and params.alpha_integral:
        return Irreducibility(False, REDUCIBLE_BETA0_ALPHA_INTEGRAL)
    if beta == 1 and n >= 2:
        return Irreducibility(False, REDUCIBLE_BETA1_N_GE_2)
    if beta == 1 and n == 1 and params.alpha_integral:
        return Irreducibility(False, REDUCIBLE_BETA1_N1_ALPHA_INTEGRAL)
    return Irreducibility(True, IRREDUCIBLE)


def trivial_submodule_generator(params: DensityParams) -> DensityElement:
    """u z with u = prod (t - a_i)^(-alpha_i); spans the trivial submodule when beta = 0."""
    if params.beta or not params.alpha_integral:
        raise NotApplicable("needs beta = 0 and integral alpha")
    exps = [-int(a.to_fraction()) for a in params.alpha]
    return DensityElement(params, unit_from_exponents(params.config, exps))


def partial_image(params: DensityParams, g: RatFunc) -> DensityElement:
    """d(g z) = (g' + g sigma) z."""
    return DensityElement(params, _log_derivative_image(params, g))


def residue_functionals(v: DensityElement) -> tuple:
    """Residues of v at every a_i after multiplying by prod (t - a_i)^(alpha_i).

    Requires integral alpha; these n functionals cut out d(R_a z) when beta = 1.
    """
    p = v.params
    if not p.alpha_integral:
        raise NotApplicable("residue criterion needs integral alpha")
    w = unit_from_exponents(p.config, [int(a.to_fraction()) for a in p.alpha])
    h = rf_mul(v.g, w)
    return tuple(h.residue(i) for i in range(1, p.config.n + 1))


def in_partial_image(params: DensityParams, v: DensityElement, degree_slack: int = 0):
    """Witness g with d(g z) = v, or None.

    With integral alpha the answer is exact (residue criterion). Otherwise a
    linear system is solved over a finite box of candidate g, so ``None`` only
    means no witness exists inside that box.
    """
    _same(params, v.params)
    cfg = params.config
    h = v.g
    if params.alpha_integral:
        alpha = [int(a.to_fraction()) for a in params.alpha]
        w = unit_from_exponents(cfg, alpha)
        hw = rf_mul(h, w)
        if any(hw.residue(i) for i in range(1, cfg.n + 1)):
            return None
        G = rf_integrate(hw)
        return rf_mul(G, unit_from_exponents(cfg, [-k for k in alpha]))

    field = cfg.field
    unknowns = [k for k in range(max(h.poly_degree, 0) + 2)]
    for i in range(1, cfg.n + 1):
        a = params.alpha[i - 1]
        slack = int(a.to_fraction()) if is_rational_integer(a) and a.to_fraction() > 0 else degree_slack
        bound = max(0, h.pole_order(i) - 1 + slack)
        unknowns.extend((i, -l) for l in range(1, bound + 1))
    columns = []
    for tag in unknowns:
        basis = RatFunc.t_power(cfg, tag) if isinstance(tag, int) else RatFunc.pole(cfg, tag[0], -tag[1])
        columns.append(_log_derivative_image(params, basis))
    tags = {tag for col in columns for tag, _ in col.terms()} | {tag for tag, _ in h.terms()}
    tags = sorted(tags, key=_tag_key)
    rows = [[col.coefficient(tag) for col in columns] for tag in tags]
    rhs = [h.coefficient(tag) for tag in tags]
    if not rows:
        return RatFunc.zero(cfg)
    x = linsolve.solve(rows, rhs, field)
    if x is None:
        return None
    g = RatFunc.zero(cfg)
    for coef, col_tag in zip(x, unknowns):
        if coef:
            basis = RatFunc.t_power(cfg, col_tag) if isinstance(col_tag, int) else RatFunc.pole(cfg, col_tag[0], -col_tag[1])
            g = g + basis.scale(coef)
    return g


def _tag_key(tag):
    return (0, tag, 0) if isinstance(tag, int) else (1, tag[0], -tag[1])


def theorem51d_iso(params0: DensityParams, g: RatFunc) -> DensityElement:
    """The module isomorphism V(alpha, 0) -> d(R_a z) in V(alpha, 1), g z -> d(g z)."""
    if params0.beta:
        raise NotApplicable("source module must have beta = 0")
    if params0.alpha_integral:
        raise NotApplicable("needs alpha outside Z^n")
    return partial_image(replace(params0, beta=params0.config.field.one), g)
