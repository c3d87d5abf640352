#!/usr/bin/env python3
"""Scan the upper-layer crossover of the base-[6] family.

The gap |D^(>= r)| - C(n, r) changes sign near n = 2.2 r; asymptotically
its sign matches the quintic 1 + 7c + 22c^2 - 15c^3 - 6c^4 - c^5 at
c = n/r - 1.  This prints the exact gap over an (r, n) window together
with the quintic's sign, all in exact arithmetic.
"""

import argparse
from fractions import Fraction

from katona import crossover_quintic, d2r_gap


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-r", type=int, default=6)
    ap.add_argument("--max-r", type=int, default=12)
    args = ap.parse_args()

    for r in range(args.min_r, args.max_r + 1):
        row = []
        for n in range(2 * r + 1, 3 * r + 1):
            gap = d2r_gap(n, r)
            c = Fraction(n, r) - 1
            q = crossover_quintic(c)
            mark = "+" if gap > 0 else ("-" if gap < 0 else "0")
            qmark = "+" if q > 0 else ("-" if q < 0 else "0")
            row.append(f"n={n}:{mark}/q{qmark}")
        print(f"r={r:>2}  " + "  ".join(row))
    print("\nlegend: sign of the exact gap / sign of the quintic at c = n/r - 1")


if __name__ == "__main__":
    main()
