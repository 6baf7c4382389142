"""Run every verify suite over a few configurations and summarise.

    python scripts/fuzz_report.py --seed 1 --iters 200
"""

import argparse
import json
import time

from npvir.cli import Session, cmd_verify
from npvir.cli.suites import SUITES

CONFIGS = [
    ("s - 0", "0, 1"),
    ("s - 0", "0, 1, -3/2"),
    ("s^2 + s + 1", "1, s, s^2"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--iters", type=int, default=100)
    ap.add_argument("--json", metavar="PATH")
    args = ap.parse_args()
    reports = []
    for field, points in CONFIGS:
        session = Session.from_text(points, field, args.seed, args.iters)
        for suite in SUITES:
            start = time.perf_counter()
            doc = cmd_verify(session, suite)
            doc = {"field": field, "points": points, **doc, "seconds": round(time.perf_counter() - start, 2)}
            reports.append(doc)
            status = "pass" if doc["pass"] else f"FAIL ({doc['failures']})"
            print(f"{points:>14} | {suite:>12} | {status:>10} | {doc['seconds']:6.2f}s")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(reports, fh, indent=2)
    return 0 if all(r["pass"] for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
