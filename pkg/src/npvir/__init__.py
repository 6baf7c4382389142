"""Exact algebra on R_a = Q(s)[t, (t - a_i)^-1]: derivations, cocycles, automorphisms, density modules."""

from .densmod import DensityParams, act, is_irreducible
from .field import QQ, FieldElement, FieldSpec
from .liealg import Derivation, ExtElement, bracket, cocycle_phi, cocycle_separating, ext_bracket
from .morph import automorphism_group, find_isomorphisms
from .rfunc import PointConfig, RatFunc, from_basis

__version__ = "0.1.0"

__all__ = [
    "QQ", "FieldSpec", "FieldElement", "PointConfig", "RatFunc", "from_basis",
    "Derivation", "ExtElement", "bracket", "ext_bracket", "cocycle_phi", "cocycle_separating",
    "find_isomorphisms", "automorphism_group", "DensityParams", "act", "is_irreducible",
]
