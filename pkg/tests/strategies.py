"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from npvir.field import QQ, FieldSpec
from npvir.liealg import Derivation
from npvir.rfunc import PointConfig, from_basis

OMEGA = FieldSpec((1, 1, 1))

CONFIGS = (
    PointConfig(QQ, (0,)),
    PointConfig(QQ, (0, 1)),
    PointConfig(QQ, (2, 5)),
    PointConfig(QQ, (0, 1, Fraction(-3, 2))),
    PointConfig(OMEGA, (OMEGA.one, OMEGA.gen, OMEGA.gen**2)),
)

coeffs = st.fractions(min_value=-6, max_value=6, max_denominator=4)
nonzero_coeffs = coeffs.filter(bool)


def tags(config):
    poly = st.integers(0, 5)
    pole = st.tuples(st.integers(1, config.n), st.integers(-5, -1))
    return st.one_of(poly, pole)


def field_coeffs(config):
    f = config.field
    if f.degree == 1:
        return coeffs.map(f.coerce)
    return st.lists(coeffs, min_size=f.degree, max_size=f.degree).map(f.element)


def rfuncs(config, max_terms=6):
    return st.lists(st.tuples(tags(config), field_coeffs(config)), max_size=max_terms).map(
        lambda ts: from_basis(config, ts)
    )


def derivations(config, max_terms=6):
    return rfuncs(config, max_terms).map(Derivation)


configs = st.sampled_from(CONFIGS)
