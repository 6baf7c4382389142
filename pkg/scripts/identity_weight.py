"""Compare the two candidate weights in the separating-cocycle identity.

The identity pairs t^m d with a double pole bracket; its index-s weight is
phi(t^m d, (t - x)^-s d) divided by binom(m, s + 2) x^(m - s - 2), which is
(s+1)^3 - (s+1). This script counts parameter sets on which each candidate
weight leaves a nonzero remainder.

    python scripts/identity_weight.py --kmax 4
"""

import argparse
from fractions import Fraction

from npvir.field import QQ
from npvir.liealg import binom, cocycle_separating, Derivation
from npvir.rfunc import PointConfig, RatFunc


def remainder(x, y, k, l, m, weight):
    total = QQ.zero
    for s in range(1, k + 2):
        c = binom(k + l - s, k + 1 - s) * binom(m, s + 2) * (2 * k + 1 - s) * weight(s)
        if c:
            total += (y - x) ** s * x ** (m - s - 2) * c
    for s in range(1, l + 2):
        c = binom(l + k - s, l + 1 - s) * binom(m, s + 2) * (2 * l + 1 - s) * weight(s)
        if c:
            total += (x - y) ** s * y ** (m - s - 2) * c
    return total


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=4)
    args = ap.parse_args()
    weights = {
        "(s+1)^3": lambda s: (s + 1) ** 3,
        "(s+1)^3-(s+1)": lambda s: (s + 1) ** 3 - (s + 1),
    }
    pairs = [(QQ(0), QQ(1)), (QQ(2), QQ(3)), (QQ(Fraction(1, 2)), QQ(-3))]
    for name, w in weights.items():
        bad = total = 0
        for x, y in pairs:
            for k in range(1, args.kmax + 1):
                for l in range(1, args.kmax + 1):
                    for m in range(1, k + l + 3):
                        total += 1
                        bad += bool(remainder(x, y, k, l, m, w))
        print(f"weight {name:>14}: {bad:4d} nonzero of {total}")
    # the weight itself, read off the cocycle
    cfg = PointConfig(QQ, (1,))
    for s in range(1, 6):
        m = s + 2
        val = cocycle_separating(Derivation(RatFunc.t_power(cfg, m)), Derivation(RatFunc.pole(cfg, 1, s)))
        print(f"s = {s}: phi(t^{m} d, (t-1)^-{s} d) = {val}   (s+1)^3-(s+1) = {(s + 1) ** 3 - (s + 1)}")


if __name__ == "__main__":
    raise SystemExit(main())
