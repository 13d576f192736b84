"""Modality phase diagram over an (alpha, rho) grid.

Writes a CSV (alpha, rho, modality, n_modes) and, when matplotlib is
installed and --plot is given, a PNG with unimodal cells in red and
bimodal cells in yellow.

    python3 scripts/phase_diagram.py --family boolean --na 100 --nr 100 --out boolean.csv --plot
"""

from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass
from pathlib import Path

from stablelaws.cli import phase_rows


@dataclass(frozen=True)
class PhaseConfig:
    family: str = "boolean"
    na: int = 50
    nr: int = 50
    out: Path = Path("phase_diagram.csv")
    plot: bool = False


def sweep(cfg: PhaseConfig) -> list[tuple[float, float, str, int]]:
    return [(a, r, rep.modality.value, len(rep.modes))
            for a, r, rep in phase_rows(cfg.family, cfg.na, cfg.nr)]


def write_csv(rows, path: Path) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("alpha", "rho", "modality", "n_modes"))
        w.writerows(rows)


def plot(rows, cfg: PhaseConfig, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    colors = ["gold" if m == "Bimodal" else "red" for _, _, m, _ in rows]
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.scatter([r[0] for r in rows], [r[1] for r in rows], c=colors, s=12, marker="s")
    ax.set_xlabel("alpha")
    ax.set_ylabel("rho")
    ax.set_title(f"{cfg.family}: red unimodal, yellow bimodal")
    fig.tight_layout()
    fig.savefig(path, dpi=150)


def parse_args(argv=None) -> PhaseConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--family", choices=("boolean", "monotone"), default="boolean")
    p.add_argument("--na", type=int, default=50)
    p.add_argument("--nr", type=int, default=50)
    p.add_argument("--out", type=Path, default=Path("phase_diagram.csv"))
    p.add_argument("--plot", action="store_true", help="also write a PNG next to the CSV")
    return PhaseConfig(**vars(p.parse_args(argv)))


def main(argv=None) -> None:
    cfg = parse_args(argv)
    rows = sweep(cfg)
    write_csv(rows, cfg.out)
    bimodal = sum(m == "Bimodal" for _, _, m, _ in rows)
    print(f"{len(rows)} cells, {bimodal} bimodal -> {cfg.out}")
    if cfg.plot:
        png = cfg.out.with_suffix(".png")
        plot(rows, cfg, png)
        print(f"plot -> {png}")


if __name__ == "__main__":
    main()
