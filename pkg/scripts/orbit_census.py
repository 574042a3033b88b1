#!/usr/bin/env python3
"""Sample random square-zero odd elements and tally orbit invariants.

Quick sanity sweep: the 4d rank pairs stay within r+ + r- <= min(4, k)
and the 3d matrix ranks stay <= 2 on the product-form locus we sample
from.
"""

import argparse
import collections
import random

from sconf import sampling, twist


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    tally_4d = collections.Counter()
    for _ in range(args.samples):
        k = rng.choice((1, 2, 3, 4, 5))
        q = sampling.rand_nilpotent_4d(rng, k)
        inv = twist.orbit_invariant_4d(q)
        assert sum(inv.rank_data) <= min(4, k)
        tally_4d[(k, inv.rank_data)] += 1

    tally_3d = collections.Counter()
    for _ in range(args.samples):
        k = rng.choice((2, 3, 4, 6))
        q = sampling.rand_nilpotent_3d(rng, k)
        r = twist.orbit_rank_3d(q)
        assert r <= 2
        tally_3d[(k, r)] += 1

    print("4d (k, (r+, r-)) counts:")
    for key in sorted(tally_4d):
        print(f"  {key}: {tally_4d[key]}")
    print("3d (k, rank) counts:")
    for key in sorted(tally_3d):
        print(f"  {key}: {tally_3d[key]}")


if __name__ == "__main__":
    main()
