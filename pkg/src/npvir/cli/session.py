from __future__ import annotations

from dataclasses import dataclass

from ..field import FieldSpec
from ..rfunc import PointConfig
from .parser import lower_to_modulus, parse_points

DEFAULT_FIELD = "s - 0"


@dataclass(frozen=True)
class Session:
    field_spec: FieldSpec
    config: PointConfig
    seed: int = 0
    iterations: int = 100

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.iterations < 1:
            raise ValueError("iterations must be positive")

    @classmethod
    def from_text(cls, points: str, field: str = DEFAULT_FIELD, seed: int = 0, iterations: int = 100) -> Session:
        spec = lower_to_modulus(field)
        return cls(spec, PointConfig(spec, parse_points(points, spec)), seed, iterations)
