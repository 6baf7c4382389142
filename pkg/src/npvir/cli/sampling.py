"""Seeded generators of small exact test data.

Each suite iteration gets its own ``random.Random`` keyed by (seed, suite,
iteration), so a report does not depend on evaluation order.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..liealg import Derivation
from ..rfunc import PointConfig, RatFunc, from_basis

MAX_TERMS = 6
EXP_RANGE = (-5, 5)


def rng_for(seed: int, suite: str, iteration: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{iteration}")


def small_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if q or not nonzero:
            return q


def basis_tag(rng: random.Random, config: PointConfig):
    e = rng.randint(*EXP_RANGE)
    if e >= 0:
        return e
    return (rng.randint(1, config.n), e)


def rfunc(rng: random.Random, config: PointConfig, max_terms: int = MAX_TERMS, nonzero: bool = False) -> RatFunc:
    while True:
        terms = [(basis_tag(rng, config), small_rational(rng, True)) for _ in range(rng.randint(1, max_terms))]
        f = from_basis(config, terms)
        if f or not nonzero:
            return f


def derivation(rng: random.Random, config: PointConfig, **kw) -> Derivation:
    return Derivation(rfunc(rng, config, **kw))


def distinct_rationals(rng: random.Random, k: int) -> list:
    out: list = []
    while len(out) < k:
        q = small_rational(rng)
        if q not in out:
            out.append(q)
    return out
