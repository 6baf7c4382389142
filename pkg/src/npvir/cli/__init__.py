from .main import (
    cmd_act,
    cmd_aut,
    cmd_bracket,
    cmd_cocycle,
    cmd_irreducible,
    cmd_iso,
    cmd_member,
    cmd_verify,
    main,
)
from .parser import lower_to_field, lower_to_modulus, lower_to_rfunc, parse_expr, parse_points
from .session import Session

__all__ = [
    "Session", "main", "parse_expr", "parse_points", "lower_to_field", "lower_to_modulus", "lower_to_rfunc",
    "cmd_aut", "cmd_iso", "cmd_bracket", "cmd_cocycle", "cmd_act", "cmd_irreducible", "cmd_member", "cmd_verify",
]
