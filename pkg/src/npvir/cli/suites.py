"""Seeded property suites behind ``verify``.

Every suite runs ``session.iterations`` independent cases. All failures are
tallied and the first one is reported.
"""

from __future__ import annotations

from fractions import Fraction

from ..densmod import DensityParams, act
from ..errors import BadParameters
from ..liealg import (
    Derivation,
    ExtElement,
    bracket,
    bracket_basis_negative,
    bracket_basis_positive,
    cocycle_phi,
    ext_bracket,
    verify_identity_cor21,
    verify_identity_cor41,
)
from ..rfunc import RatFunc, shifted_power
from . import sampling as S

BETA_GRID = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2))


def _d(x: Derivation) -> str:
    return x.to_text()


def _jacobi(x, y, z):
    return (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero()


def _ext_jacobi(x, y, z):
    total = ext_bracket(x, ext_bracket(y, z)) + ext_bracket(y, ext_bracket(z, x)) + ext_bracket(z, ext_bracket(x, y))
    return total.is_zero()


def case_jacobi(session, rng):
    cfg = session.config
    x, y, z = (S.derivation(rng, cfg) for _ in range(3))
    central = [tuple(S.small_rational(rng) for _ in range(cfg.n)) for _ in range(3)]
    ex, ey, ez = (ExtElement(d, c) for d, c in zip((x, y, z), central))
    if _jacobi(x, y, z) and _ext_jacobi(ex, ey, ez):
        return None
    return {"x": _d(x), "y": _d(y), "z": _d(z)}


def case_cocycle(session, rng):
    cfg = session.config
    x, y, z = (S.derivation(rng, cfg) for _ in range(3))
    for i in range(1, cfg.n + 1):
        skew = cocycle_phi(i, x, y) + cocycle_phi(i, y, x)
        cyc = cocycle_phi(i, bracket(x, y), z) + cocycle_phi(i, bracket(y, z), x) + cocycle_phi(i, bracket(z, x), y)
        if skew or cyc:
            return {"i": i, "x": _d(x), "y": _d(y), "z": _d(z)}
    return None


def case_cor21(session, rng):
    F = session.field_spec
    x, y, z = (F.coerce(q) for q in S.distinct_rationals(rng, 3))
    m, k, l = (rng.randint(1, 5) for _ in range(3))
    for r in range(1, m + 2):
        if not verify_identity_cor21(x, y, z, m, k, l, r):
            return {"x": x.to_text(), "y": y.to_text(), "z": z.to_text(), "m": m, "k": k, "l": l, "r": r}
    return None


def case_cor41(session, rng):
    F = session.field_spec
    x, y = (F.coerce(q) for q in S.distinct_rationals(rng, 2))
    k, l = rng.randint(1, 4), rng.randint(1, 4)
    for m in range(1, k + l + 3):
        if not verify_identity_cor41(x, y, k, l, m):
            return {"x": x.to_text(), "y": y.to_text(), "k": k, "l": l, "m": m}
    return None


def case_closedform(session, rng):
    cfg = session.config
    if cfg.n < 2:
        raise BadParameters("closedform suite needs at least two points")
    i, j = rng.sample(range(1, cfg.n + 1), 2)
    k, m = rng.randint(0, 5), rng.randint(-5, 5)
    generic = bracket(Derivation(shifted_power(cfg, i, k)), Derivation(shifted_power(cfg, j, m)))
    if bracket_basis_positive(cfg, i, k, j, m) != generic:
        return {"form": "positive", "i": i, "k": k, "j": j, "m": m}
    kk, ll = rng.randint(1, 5), rng.randint(1, 5)
    generic = bracket(Derivation(RatFunc.pole(cfg, i, kk)), Derivation(RatFunc.pole(cfg, j, ll)))
    if bracket_basis_negative(cfg, i, kk, j, ll) != generic:
        return {"form": "negative", "i": i, "k": kk, "j": j, "l": ll}
    return None


def random_density_params(rng, cfg) -> DensityParams:
    beta = rng.choice(BETA_GRID)
    kind = rng.randrange(3)
    if kind == 0:
        alpha = (0,) * cfg.n
    elif kind == 1:
        alpha = tuple(rng.randint(-3, 3) for _ in range(cfg.n))
    else:
        alpha = (Fraction(1, 2),) * cfg.n
    return DensityParams(cfg, alpha, beta)


def case_module_axiom(session, rng):
    cfg = session.config
    params = random_density_params(rng, cfg)
    x, y = S.derivation(rng, cfg), S.derivation(rng, cfg)
    v = params.element(S.rfunc(rng, cfg))
    lhs = act(bracket(x, y), v)
    rhs = act(x, act(y, v)) - act(y, act(x, v))
    if lhs == rhs:
        return None
    return {
        "alpha": [a.to_text() for a in params.alpha],
        "beta": params.beta.to_text(),
        "x": _d(x),
        "y": _d(y),
        "g": v.g.to_text(),
    }


SUITES = {
    "jacobi": case_jacobi,
    "cocycle": case_cocycle,
    "cor21": case_cor21,
    "cor41": case_cor41,
    "closedform": case_closedform,
    "module-axiom": case_module_axiom,
}


def run_suite(session, name: str) -> dict:
    try:
        case = SUITES[name]
    except KeyError:
        raise BadParameters(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    failures = 0
    first = None
    for it in range(session.iterations):
        bad = case(session, S.rng_for(session.seed, name, it))
        if bad is not None:
            failures += 1
            if first is None:
                first = {"iteration": it, **bad}
    return {
        "suite": name,
        "seed": session.seed,
        "iterations": session.iterations,
        "pass": failures == 0,
        "failures": failures,
        "first_counterexample": first,
    }
