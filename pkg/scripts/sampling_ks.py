"""Kolmogorov-Smirnov distance of seeded samples against the analytic cdf.

    python3 scripts/sampling_ks.py --n 100000 --seed 0
"""

from __future__ import annotations

import argparse
import math
import time

from stablelaws import StableParams
from stablelaws.distribution import StableDistribution

CELLS = (
    ("boolean", 0.5, 0.5), ("boolean", 1.0, 1.0), ("boolean", 1.5, 0.3),
    ("monotone", 1.5, 1.0), ("monotone", 2.0, 0.3),
)


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    bound = 1.95 / math.sqrt(args.n)
    print("family,alpha,rho,ks,ks_sqrt_n,seconds")
    for fam, a, r in CELLS:
        t0 = time.perf_counter()
        dist = StableDistribution(StableParams(fam, a, r))
        ks = dist.ks_distance(dist.sample(args.n, seed=args.seed))
        flag = "" if ks <= bound else "  # above 1.95/sqrt(n)"
        print(f"{fam},{a},{r},{ks:.5f},{ks * math.sqrt(args.n):.3f},"
              f"{time.perf_counter() - t0:.2f}{flag}")


if __name__ == "__main__":
    main()
