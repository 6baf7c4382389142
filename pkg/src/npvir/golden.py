"""Reference point configurations with known automorphism groups.

Each case is given in CLI syntax: a monic modulus in ``s`` and the points as
field expressions. ``s`` is a root of the modulus (a primitive root of unity
for the cyclotomic moduli).
"""

from __future__ import annotations

from dataclasses import dataclass

QQ_FIELD = "s - 0"
CYCLO3 = "s^2 + s + 1"
CYCLO4 = "s^2 + 1"
CYCLO5 = "s^4 + s^3 + s^2 + s + 1"


@dataclass(frozen=True)
class GoldenCase:
    name: str
    field: str
    points: str
    label: str
    order: int


def _icosahedral_points() -> str:
    # 0, then zeta^k (zeta + zeta^4) and zeta^k (zeta^2 + zeta^3) for k = 0..4
    pts = ["0"]
    pts += [f"s^{k}*(s + s^4)" for k in range(5)]
    pts += [f"s^{k}*(s^2 + s^3)" for k in range(5)]
    return ", ".join(pts)


GOLDEN = (
    GoldenCase("two points", QQ_FIELD, "0, 1", "D3", 6),
    GoldenCase("generic triple", QQ_FIELD, "0, 1, 5", "D2", 4),
    GoldenCase("harmonic triple", QQ_FIELD, "0, 1, -1", "D4", 8),
    GoldenCase("equianharmonic triple", "s^2 + 3", "0, 1, (1 + s)/2", "A4", 12),
    GoldenCase("symmetric quadruple", QQ_FIELD, "1, -1, 2, -2", "C2", 2),
    GoldenCase("two cube-root orbits", CYCLO3, "1, s, s^2, 10, 10*s, 10*s^2", "C3", 3),
    GoldenCase("rigid quadruple", QQ_FIELD, "0, -1, -2, 3", "C1", 1),
    GoldenCase("fifth roots of unity", CYCLO5, "s, s^2, s^3, s^4, 1", "C5", 5),
    GoldenCase("cube roots and 0", CYCLO3, "0, 1, s, s^2", "D3", 6),
    GoldenCase("fourth roots and 0", CYCLO4, "0, 1, s, -1, -s", "S4", 24),
    GoldenCase("icosahedral", CYCLO5, _icosahedral_points(), "A5", 60),
)
