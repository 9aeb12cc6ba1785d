#!/usr/bin/env python3
"""Survey (half-space dimension, order dimension) over all labeled posets.

Usage: python scripts/dimension_survey.py [MAX_N]
Tabulates how often the two dimensions agree and where they split, which
is exactly the half-space (hs-dim 1, dim 2) corner.
"""

import sys
from collections import Counter

from quord import hs_dimension, induced_order, order_dimension
from quord.oracles import all_posets


def main(argv: list[str]) -> int:
    max_n = int(argv[0]) if argv else 4
    for n in range(max_n + 1):
        table: Counter[tuple[int, int]] = Counter()
        for p in all_posets(n):
            hs, _ = hs_dimension(p)
            dim, _ = order_dimension(induced_order(p).induced)
            table[(hs, dim)] += 1
        cells = ", ".join(
            f"(hs={hs}, dim={dim}): {count}" for (hs, dim), count in sorted(table.items())
        )
        print(f"n={n}  posets={len(all_posets(n))}  {cells}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
