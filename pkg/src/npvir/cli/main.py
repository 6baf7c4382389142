"""``npvir`` command line.

    npvir aut --points "0,1" --json
    npvir iso --points "0,1,5" --other "0,1,1/5"
    npvir bracket --points "0,1" "t^2" "1/t"
    npvir cocycle --points "0,1" 1 "t^3" "t^-1"
    npvir act --points 0 --alpha 1/2 --beta 1 "t" "1"
    npvir irreducible --points "0,1" --alpha "0,0" --beta 0
    npvir member --points 0 --alpha 1/2 --beta 1 "1"
    npvir verify jacobi --points "0,1" --seed 1 --iters 300
"""

from __future__ import annotations

import argparse
import sys

from ..densmod import DensityParams, act, in_partial_image, is_irreducible
from ..errors import NPVirError
from ..liealg import Derivation, bracket, cocycle_phi, cocycle_separating
from ..morph import automorphism_group, find_isomorphisms
from ..rfunc import PointConfig
from .jsonio import dumps, field_json, morphism_json, rfunc_json
from .parser import lower_to_field, lower_to_rfunc, parse_points
from .session import DEFAULT_FIELD, Session
from .suites import SUITES, run_suite

USAGE_STATUS = 2


def cmd_aut(session: Session) -> dict:
    group = automorphism_group(session.config)
    return {
        "order": group.order,
        "label": group.label,
        "elements": [morphism_json(m) for m in group.elements],
    }


def cmd_iso(session: Session, other_points: str) -> dict:
    other = PointConfig(session.field_spec, parse_points(other_points, session.field_spec))
    maps = find_isomorphisms(session.config, other)
    return {
        "isomorphic": bool(maps),
        "kinds_found": sorted({m.kind for m in maps}),
        "maps": [morphism_json(m) for m in maps],
    }


def cmd_bracket(session: Session, e1: str, e2: str) -> dict:
    cfg = session.config
    x, y = Derivation(lower_to_rfunc(e1, cfg)), Derivation(lower_to_rfunc(e2, cfg))
    return {"result": rfunc_json(bracket(x, y).coeff)}


def cmd_cocycle(session: Session, i, e1: str, e2: str) -> dict:
    """``i`` is a 1-based pole index or ``"sum"`` for the separating cocycle."""
    cfg = session.config
    x, y = Derivation(lower_to_rfunc(e1, cfg)), Derivation(lower_to_rfunc(e2, cfg))
    value = cocycle_separating(x, y) if i == "sum" else cocycle_phi(int(i), x, y)
    return {"result": field_json(value)}


def _params(session: Session, alpha: str | None, beta: str) -> DensityParams:
    spec = session.field_spec
    n = session.config.n
    alpha_vals = parse_points(alpha, spec) if alpha else (spec.zero,) * n
    return DensityParams(session.config, alpha_vals, lower_to_field(beta, spec))


def cmd_act(session: Session, alpha, beta, f: str, g: str) -> dict:
    params = _params(session, alpha, beta)
    x = Derivation(lower_to_rfunc(f, session.config))
    v = params.element(lower_to_rfunc(g, session.config))
    return {"result": rfunc_json(act(x, v).g)}


def cmd_irreducible(session: Session, alpha, beta) -> dict:
    res = is_irreducible(_params(session, alpha, beta))
    return {"irreducible": res.irreducible, "reason": res.reason}


def cmd_member(session: Session, alpha, beta, v: str, slack: int = 0) -> dict:
    params = _params(session, alpha, beta)
    w = in_partial_image(params, params.element(lower_to_rfunc(v, session.config)), slack)
    return {"member": w is not None, "witness": None if w is None else rfunc_json(w)}


def cmd_verify(session: Session, suite: str) -> dict:
    return run_suite(session, suite)


def _text(doc, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in doc.items():
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{k}:")
            lines.append(_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}: [{len(v)}]")
            for item in v:
                lines.append(_text(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines).rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=DEFAULT_FIELD, help="monic polynomial in s (default: %(default)s)")
    common.add_argument("--points", default="0,1", help="comma-separated field expressions")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--iters", type=int, default=100)
    common.add_argument("--slack", type=int, default=0, help="extra pole order for the bounded solve")

    dens = argparse.ArgumentParser(add_help=False)
    dens.add_argument("--alpha", default=None, help="comma-separated alpha_i (default all zero)")
    dens.add_argument("--beta", default="0")

    ap = argparse.ArgumentParser(prog="npvir", description="Exact computations with derivations of R_a.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("aut", parents=[common], help="automorphism group")
    p = sub.add_parser("iso", parents=[common], help="isomorphisms to another configuration")
    p.add_argument("--other", required=True)
    p = sub.add_parser("bracket", parents=[common], help="[f d, g d]")
    p.add_argument("f")
    p.add_argument("g")
    p = sub.add_parser("cocycle", parents=[common], help="phi_i(f d, g d)")
    p.add_argument("i", help="pole index, or 'sum' for the separating cocycle")
    p.add_argument("f")
    p.add_argument("g")
    p = sub.add_parser("act", parents=[common, dens], help="(f d).(g z) in V(alpha, beta)")
    p.add_argument("f")
    p.add_argument("g")
    sub.add_parser("irreducible", parents=[common, dens], help="irreducibility of V(alpha, beta)")
    p = sub.add_parser("member", parents=[common, dens], help="membership of v z in d(R_a z)")
    p.add_argument("v")
    p = sub.add_parser("verify", parents=[common], help="seeded property suite")
    p.add_argument("suite", choices=list(SUITES))
    return ap


def _dispatch(args) -> dict:
    session = Session.from_text(args.points, args.field, args.seed, args.iters)
    c = args.command
    if c == "aut":
        return cmd_aut(session)
    if c == "iso":
        return cmd_iso(session, args.other)
    if c == "bracket":
        return cmd_bracket(session, args.f, args.g)
    if c == "cocycle":
        return cmd_cocycle(session, args.i, args.f, args.g)
    if c == "act":
        return cmd_act(session, args.alpha, args.beta, args.f, args.g)
    if c == "irreducible":
        return cmd_irreducible(session, args.alpha, args.beta)
    if c == "member":
        return cmd_member(session, args.alpha, args.beta, args.v, args.slack)
    return cmd_verify(session, args.suite)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = _dispatch(args)
    except NPVirError as exc:
        return _fail(args, exc.code, str(exc), exc.exit_status)
    except ValueError as exc:
        return _fail(args, "invalid_argument", str(exc), USAGE_STATUS)
    print(dumps(doc) if args.json else _text(doc))
    if args.command == "verify" and not doc["pass"]:
        return 1
    return 0


def _fail(args, code, message, status) -> int:
    if args.json:
        print(dumps({"error": code, "message": message, "exit_status": status}))
    else:
        print(f"npvir: {code}: {message}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
