"""JSON encodings with stable keys."""

from __future__ import annotations

import json

from ..field import FieldElement
from ..morph import Morphism
from ..rfunc import RatFunc


def field_json(x: FieldElement) -> list:
    return [str(c) for c in x.coeffs]


def rfunc_json(f: RatFunc) -> dict:
    return {
        "poly": [field_json(c) for c in f.poly],
        "principal": {str(i): [field_json(c) for c in v] for i, v in f.principal.items()},
    }


def morphism_json(m: Morphism) -> dict:
    out = {
        "matrix": [field_json(v) for v in m.map.matrix],
        "kind": m.kind,
        "perm": list(m.perm),
        "c": field_json(m.c),
    }
    if m.anchor is not None:
        out["anchor"] = m.anchor
    return out


def dumps(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, separators=(", ", ": "))
