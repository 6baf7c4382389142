import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from npvir.densmod import (
    DensityElement,
    DensityParams,
    act,
    in_partial_image,
    is_irreducible,
    partial_image,
    residue_functionals,
    sigma,
    theorem51d_iso,
    trivial_submodule_generator,
)
from npvir.errors import ConfigMismatch, NotApplicable
from npvir.field import QQ
from npvir.liealg import Derivation, bracket
from npvir import linsolve
from npvir.rfunc import PointConfig, RatFunc, from_basis, rf_derive, rf_mul, unit_from_exponents
from strategies import CONFIGS, derivations, rfuncs

A0 = PointConfig(QQ, (0,))
A01 = PointConfig(QQ, (0, 1))
A3 = PointConfig(QQ, (0, 1, Fraction(-3, 2)))
HALF = Fraction(1, 2)


def rf(cfg, terms):
    return from_basis(cfg, terms)


def d(cfg, terms):
    return Derivation(rf(cfg, terms))


def rand_rf(cfg, rng, terms=5):
    return rf(cfg, [
        ((e if e >= 0 else (rng.randint(1, cfg.n), e)), Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        for e in (rng.randint(-4, 4) for _ in range(rng.randint(1, terms)))
    ])


class TestSigmaAndAct:
    def test_sigma(self):
        assert sigma(DensityParams(A01, (0, 0), 0)).is_zero()
        assert sigma(DensityParams(A0, (2,), 0)) == rf(A0, {(1, -1): 2})
        assert sigma(DensityParams(A01, (1, -1), 0)) == rf(A01, {(1, -1): 1, (2, -1): -1})

    def test_euler_weight(self):
        a, b = Fraction(2, 3), Fraction(-5, 7)
        p = DensityParams(A0, (a,), b)
        v = act(d(A0, {1: 1}), p.element(RatFunc.constant(A0, 1)))
        assert v.g == RatFunc.constant(A0, a + b)

    def test_natural_and_adjoint(self):
        rng = random.Random(1)
        nat = DensityParams(A01, (0, 0), 0)
        adj = DensityParams(A01, (0, 0), -1)
        for _ in range(20):
            f, g = rand_rf(A01, rng), rand_rf(A01, rng)
            assert act(Derivation(f), nat.element(g)).g == rf_mul(f, rf_derive(g))
            assert act(Derivation(f), adj.element(g)).g == bracket(Derivation(f), Derivation(g)).coeff

    def test_config_mismatch(self):
        p = DensityParams(A01, (0, 0), 0)
        with pytest.raises(ConfigMismatch):
            act(d(A0, {1: 1}), p.element(RatFunc.constant(A01, 1)))
        q = DensityParams(A01, (1, 0), 0)
        with pytest.raises(ConfigMismatch):
            p.element(RatFunc.zero(A01)) + q.element(RatFunc.zero(A01))

    def test_alpha_length(self):
        with pytest.raises(ValueError):
            DensityParams(A01, (0,), 0)


IRREDUCIBILITY_GRID = [
    (A01, (0, 0), 0, False, "beta0_alpha_integral"),
    (A0, (3,), 0, False, "beta0_alpha_integral"),
    (A3, (1, -2, 5), 0, False, "beta0_alpha_integral"),
    (A01, (HALF, Fraction(1, 3)), 1, False, "beta1_n_ge_2"),
    (A01, (0, 0), 1, False, "beta1_n_ge_2"),
    (A3, (HALF, 0, 1), 1, False, "beta1_n_ge_2"),
    (A0, (0,), 1, False, "beta1_n1_alpha_integral"),
    (A0, (-4,), 1, False, "beta1_n1_alpha_integral"),
    (A0, (HALF,), 1, True, "irreducible"),
    (A01, (HALF, 0), 0, True, "irreducible"),
    (A01, (0, 0), HALF, True, "irreducible"),
    (A3, (1, 2, 3), -1, True, "irreducible"),
]


@pytest.mark.parametrize("cfg, alpha, beta, irreducible, reason", IRREDUCIBILITY_GRID)
def test_irreducibility(cfg, alpha, beta, irreducible, reason):
    res = is_irreducible(DensityParams(cfg, alpha, beta))
    assert (res.irreducible, res.reason) == (irreducible, reason)
    assert bool(res) is irreducible


class TestTrivialSubmodule:
    def test_alpha_zero(self):
        u = trivial_submodule_generator(DensityParams(A01, (0, 0), 0))
        assert u.g == RatFunc.constant(A01, 1)

    def test_alpha_one(self):
        p = DensityParams(A0, (1,), 0)
        u = trivial_submodule_generator(p)
        assert u.g == rf(A0, {(1, -1): 1})
        for f in (rf(A0, {0: 1}), rf(A0, {1: 1}), rf(A0, {2: 1}), rf(A0, {(1, -1): 1})):
            assert act(Derivation(f), u).is_zero()

    def test_not_applicable(self):
        with pytest.raises(NotApplicable):
            trivial_submodule_generator(DensityParams(A01, (0, 0), 1))
        with pytest.raises(NotApplicable):
            trivial_submodule_generator(DensityParams(A01, (HALF, 0), 0))

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(CONFIGS).flatmap(lambda c: st.tuples(
        derivations(c), st.lists(st.integers(-3, 3), min_size=c.n, max_size=c.n))))
    def test_annihilated(self, data):
        x, alpha = data
        u = trivial_submodule_generator(DensityParams(x.config, alpha, 0))
        assert act(x, u).is_zero()


class TestPartialImage:
    def test_examples(self):
        p = DensityParams(A01, (0, 0), 1)
        assert partial_image(p, RatFunc.zero(A01)).is_zero()
        assert partial_image(p, rf(A01, {2: HALF})).g == rf(A01, {1: 1})
        p0 = DensityParams(A0, (0,), 1)
        assert partial_image(p0, rf(A0, {(1, -1): -1})).g == rf(A0, {(1, -2): 1})

    def test_membership_examples(self):
        p = DensityParams(A01, (0, 0), 1)
        for k in range(5):
            w = in_partial_image(p, p.element(rf(A01, {k: 1})))
            assert w == rf(A01, {k + 1: Fraction(1, k + 1)})
        assert in_partial_image(p, p.element(rf(A01, {(1, -1): 1}))) is None

    def test_quotient_zero_for_one_point(self):
        p = DensityParams(A0, (HALF,), 1)
        w = in_partial_image(p, p.element(RatFunc.constant(A0, 1)))
        assert w == rf(A0, {1: Fraction(2, 3)})
        rng = random.Random(4)
        for _ in range(30):
            h = rand_rf(A0, rng)
            w = in_partial_image(p, p.element(h))
            assert w is not None and partial_image(p, w).g == h

    def test_bounded_solve_sound(self):
        p = DensityParams(A01, (Fraction(1, 3), Fraction(1, 4)), 1)
        rng = random.Random(6)
        for _ in range(30):
            g = rand_rf(A01, rng)
            h = partial_image(p, g).g
            w = in_partial_image(p, p.element(h))
            assert w is not None and partial_image(p, w).g == h

    def test_positive_integer_slack(self):
        # alpha_1 = 2 kills the (t)^-2 coefficient of d((t)^-2 z), so the witness pole exceeds ord(h) - 1
        p = DensityParams(A01, (2, HALF), 1)
        g = rf(A01, {(1, -2): 1, (2, -1): 3})
        h = partial_image(p, g).g
        w = in_partial_image(p, p.element(h))
        assert w is not None and partial_image(p, w).g == h

    def test_integral_criterion_with_shift(self):
        p = DensityParams(A01, (1, -2), 1)
        g = rf(A01, {(1, -3): 1, 2: 1})
        h = partial_image(p, g).g
        w = in_partial_image(p, p.element(h))
        assert partial_image(p, w).g == h
        assert all(r == 0 for r in residue_functionals(p.element(h)))


class TestQuotientDimension:
    @pytest.mark.parametrize("cfg", [A0, A01, A3])
    def test_residue_functionals(self, cfg):
        p = DensityParams(cfg, (0,) * cfg.n, 1)
        rng = random.Random(cfg.n)
        for _ in range(30):
            v = partial_image(p, rand_rf(cfg, rng))
            assert all(r == 0 for r in residue_functionals(v))
        rows = [list(residue_functionals(p.element(RatFunc.pole(cfg, i, 1)))) for i in range(1, cfg.n + 1)]
        assert linsolve.rank(rows) == cfg.n

    def test_non_integral_not_applicable(self):
        with pytest.raises(NotApplicable):
            residue_functionals(DensityParams(A01, (HALF, 0), 1).element(RatFunc.zero(A01)))


class TestIsomorphisms:
    def test_zero(self):
        p0 = DensityParams(A01, (HALF, Fraction(1, 3)), 0)
        assert theorem51d_iso(p0, RatFunc.zero(A01)).is_zero()

    def test_not_applicable(self):
        with pytest.raises(NotApplicable):
            theorem51d_iso(DensityParams(A01, (1, 2), 0), RatFunc.zero(A01))
        with pytest.raises(NotApplicable):
            theorem51d_iso(DensityParams(A01, (HALF, 0), 1), RatFunc.zero(A01))

    @pytest.mark.parametrize("alpha", [(HALF, Fraction(1, 3)), (Fraction(-2, 3), 4)])
    def test_equivariant_and_injective(self, alpha):
        p0 = DensityParams(A01, alpha, 0)
        rng = random.Random(8)
        for _ in range(40):
            x = Derivation(rand_rf(A01, rng))
            g = rand_rf(A01, rng)
            lhs = theorem51d_iso(p0, act(x, p0.element(g)).g)
            rhs = act(x, theorem51d_iso(p0, g))
            assert lhs == rhs
            assert lhs.params.beta == 1
            if g:
                assert not theorem51d_iso(p0, g).is_zero()

    def test_integer_shift(self):
        rng = random.Random(10)
        k = (2, -1)
        for beta in (0, 1, HALF):
            p = DensityParams(A01, (HALF, Fraction(1, 5)), beta)
            q = DensityParams(A01, tuple(a - kk for a, kk in zip(p.alpha, k)), beta)
            w = unit_from_exponents(A01, k)
            for _ in range(15):
                x, g = Derivation(rand_rf(A01, rng)), rand_rf(A01, rng)
                image = act(x, p.element(g)).g
                assert act(x, q.element(rf_mul(g, w))).g == rf_mul(image, w)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(CONFIGS[:4]).flatmap(lambda c: st.tuples(
        derivations(c, 4), derivations(c, 4), rfuncs(c, 4),
        st.sampled_from([0, 1, -1, HALF]),
        st.sampled_from(["zero", "int", "half"]),
        st.lists(st.integers(-3, 3), min_size=c.n, max_size=c.n),
    ))
)
def test_module_axiom(data):
    x, y, g, beta, kind, ints = data
    cfg = x.config
    alpha = {"zero": (0,) * cfg.n, "int": tuple(ints), "half": (HALF,) * cfg.n}[kind]
    p = DensityParams(cfg, alpha, beta)
    v = p.element(g)
    assert act(bracket(x, y), v) == act(x, act(y, v)) - act(y, act(x, v))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CONFIGS[:4]).flatmap(lambda c: st.tuples(
    derivations(c, 4), rfuncs(c, 4), st.lists(st.integers(-3, 3), min_size=c.n, max_size=c.n))))
def test_beta_one_outputs_are_derivatives(data):
    x, g, alpha = data
    p = DensityParams(x.config, alpha, 1)
    out = act(x, p.element(g))
    w = in_partial_image(p, out)
    assert w is not None and partial_image(p, w) == out


def test_orbit_lands_in_image():
    rng = random.Random(12)
    p = DensityParams(A01, (0, 0), 1)
    basis = [from_basis(A01, {k: 1}) for k in range(5)]
    basis += [RatFunc.pole(A01, i, l) for i in (1, 2) for l in range(1, 5)]
    for _ in range(10):
        v = p.element(rand_rf(A01, rng))
        for f in basis:
            assert in_partial_image(p, act(Derivation(f), v)) is not None


def test_reduce_to_generator():
    """From any nonzero g z, multiplication and differentiation reach z."""
    rng = random.Random(13)
    for cfg in (A0, A01, A3):
        for _ in range(10):
            g = rand_rf(cfg, rng)
            if not g:
                continue
            clear = unit_from_exponents(cfg, [g.pole_order(i) for i in range(1, cfg.n + 1)])
            h = rf_mul(g, clear)
            assert not h.principal
            while h.poly_degree > 0:
                h = rf_derive(h)
            assert h.poly_degree == 0
            assert rf_mul(h, RatFunc.constant(cfg, h.poly[0].inverse())) == RatFunc.constant(cfg, 1)


def test_element_arithmetic():
    p = DensityParams(A01, (HALF, 0), 1)
    a = p.element(rf(A01, {1: 1}))
    b = p.element(rf(A01, {(2, -1): 2}))
    assert (a + b - b) == a
    assert (-a).g == rf(A01, {1: -1})
    assert a.scale(3).g == rf(A01, {1: 3})
    assert isinstance(a, DensityElement)
