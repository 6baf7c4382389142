"""Recompute the automorphism-group table for every reference configuration.

    python scripts/golden_table.py [--skip-a5] [--json out.json]
"""

import argparse
import json
import time

from npvir.cli import Session
from npvir.golden import GOLDEN
from npvir.morph import automorphism_group, first_kind_subgroup, second_kind_set


def run(case):
    cfg = Session.from_text(case.points, case.field).config
    start = time.perf_counter()
    group = automorphism_group(cfg)
    elapsed = time.perf_counter() - start
    n = cfg.n
    return {
        "name": case.name,
        "n": n,
        "label": group.label,
        "order": group.order,
        "expected": f"{case.label}/{case.order}",
        "ok": (group.label, group.order) == (case.label, case.order),
        "first_kind": first_kind_subgroup(cfg).label,
        "second_kind": len(second_kind_set(cfg)),
        "bound": n**3 - n**2 + n,
        "seconds": round(elapsed, 3),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-a5", action="store_true")
    ap.add_argument("--json", metavar="PATH")
    args = ap.parse_args()
    cases = GOLDEN[:-1] if args.skip_a5 else GOLDEN
    rows = [run(c) for c in cases]
    head = f"{'case':24} {'n':>3} {'group':>6} {'|G|':>4} {'bound':>6} {'1st':>4} {'#2nd':>5} {'sec':>7}  ok"
    print(head)
    print("-" * len(head))
    for r in rows:
        print(
            f"{r['name']:24} {r['n']:>3} {r['label']:>6} {r['order']:>4} {r['bound']:>6} "
            f"{r['first_kind']:>4} {r['second_kind']:>5} {r['seconds']:>7.2f}  {'yes' if r['ok'] else 'NO'}"
        )
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if all(r["ok"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
