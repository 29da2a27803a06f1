#!/usr/bin/env python3
"""Convergence of the limiting m-valuations toward the exact threshold.

Prints t_m = ceil(m*t)/m for m = 1..64 on the abelian-cover preset and the
exact gap t_m - t, which stays below 1/m.
"""

import argparse
from fractions import Fraction

from conesing import QuadNum, build, limiting_valuation, minus_threshold


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--preset", default="abelian-cover")
    parser.add_argument("--max-m", type=int, default=64)
    args = parser.parse_args()

    cone = build(args.preset)
    t = minus_threshold(cone).t
    print(f"{args.preset}: t_minus = {t.render()}")
    for m in range(1, args.max_m + 1):
        t_m, val_m = limiting_valuation(cone, m)
        gap = QuadNum(t_m) - t
        bound = Fraction(1, m)
        assert gap.sign() >= 0 and (gap - bound).sign() < 0
        print(
            f"  m={m:<3} t_m={str(t_m):<8} val_m={str(val_m):<8} "
            f"gap≈{gap.approx6()} < 1/{m}"
        )


if __name__ == "__main__":
    main()
