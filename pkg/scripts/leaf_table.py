"""Tabulate type counts and leaf-dimension profiles for all coprime (k, n).

    python scripts/leaf_table.py --max-n 12
"""

import argparse
from collections import Counter
from math import gcd

from leafatlas import build_atlas


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=12)
    args = parser.parse_args()

    print(f"{'k':>3} {'n':>3} {'HN':>4} {'types':>6} {'edges':>6}  leaf_dim:count")
    for n in range(3, args.max_n + 1):
        for k in range(1, n):
            if gcd(k, n) != 1:
                continue
            atlas = build_atlas(k, n, refine=True)
            profile = Counter(r.leaf_dim for r in atlas.records)
            dims = " ".join(f"{d}:{profile[d]}" for d in sorted(profile, reverse=True))
            print(f"{k:>3} {n:>3} {len(atlas.hn_types):>4} {len(atlas.records):>6} {len(atlas.poset_edges):>6}  {dims}")


if __name__ == "__main__":
    main()
