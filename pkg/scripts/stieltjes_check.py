"""Closed-form density against Stieltjes inversion of the F-transform.

Prints the worst absolute gap between pdf(x) and -Im G(x + iy)/pi for a
ladder of y values, showing the O(y) convergence of the inversion.

    python3 scripts/stieltjes_check.py --family monotone --alpha 1.5 --rho 0.3
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from stablelaws import StableParams
from stablelaws.distribution import StableDistribution
from stablelaws.transforms import stieltjes_density
from stablelaws.verify import stieltjes_points


@dataclass(frozen=True)
class InversionConfig:
    family: str
    alpha: float
    rho: float
    points: int = 20
    ys: tuple[float, ...] = (1e-2, 1e-4, 1e-6, 1e-8)


def worst_gaps(cfg: InversionConfig) -> list[tuple[float, float]]:
    params = StableParams(cfg.family, cfg.alpha, cfg.rho)
    dist = StableDistribution(params)
    if not dist.decomposition.pieces:
        return []
    xs = stieltjes_points(dist, n=cfg.points)
    closed = dist.pdf_values(xs)
    out = []
    for y in cfg.ys:
        inv = np.array([stieltjes_density(params, x, y) for x in xs])
        out.append((y, float(np.max(np.abs(inv - closed)))))
    return out


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--family", choices=("boolean", "monotone"), required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--points", type=int, default=20)
    cfg = InversionConfig(**vars(p.parse_args(argv)))
    gaps = worst_gaps(cfg)
    if not gaps:
        print("purely atomic law: no density to compare")
        return
    print("y,max_abs_gap")
    for y, gap in gaps:
        print(f"{y:.0e},{gap:.3e}")


if __name__ == "__main__":
    main()
