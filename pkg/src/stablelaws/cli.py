"""Command-line interface: ``stable-laws <command> [options]``.

Exit status is 0 on success, 1 when a verification check fails and 2 on
argument or parameter errors.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import sys
from typing import Sequence

import numpy as np

from . import __version__, _fault
from .distribution import StableDistribution
from .params import Family, StableParams
from .structures import Divergent
from .verify import SUITES, run_suite, tolerance

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad option values found after parsing; reported with exit status 2."""


def fmt(v) -> str:
    """17 significant digits; infinities as ``inf``/``-inf``."""
    if isinstance(v, Divergent):
        return "inf"
    v = float(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return format(v, ".17g")


def _json_safe(obj):
    if isinstance(obj, Divergent):
        return "inf"
    if isinstance(obj, float) and not math.isfinite(obj):
        return "inf" if obj > 0 else ("-inf" if obj < 0 else "nan")
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, np.generic):
        return _json_safe(obj.item())
    return obj


def params_dict(p: StableParams) -> dict:
    return {"family": p.family.value, "alpha": p.alpha, "rho": p.rho, "theta": p.theta}


def parse_grid(text: str) -> np.ndarray:
    """``LO:HI:N`` to N evenly spaced points."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must look like LO:HI:N, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like LO:HI:N, got {text!r}") from None
    if n < 1 or not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo:
        raise argparse.ArgumentTypeError(f"grid needs finite LO <= HI and N >= 1, got {text!r}")
    return np.linspace(lo, hi, n)


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stable-laws",
        description="Boolean and monotone stable distributions: densities, atoms and modes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    law = argparse.ArgumentParser(add_help=False)
    law.add_argument("--family", required=True, choices=[f.value for f in Family])
    law.add_argument("--alpha", required=True, type=float)
    law.add_argument("--rho", required=True, type=float)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=("json", "csv"), default=None,
                     help="output format (default depends on the command)")

    sub.add_parser("info", parents=[law, out], help="decomposition and modes as JSON")
    for name, what in (("pdf", "density"), ("cdf", "distribution function")):
        p = sub.add_parser(name, parents=[law, out], help=f"{what} at points")
        where = p.add_mutually_exclusive_group(required=True)
        where.add_argument("--x", type=float, nargs="+", help="evaluation points")
        where.add_argument("--grid", type=parse_grid, metavar="LO:HI:N",
                           help="N points from LO to HI; write --grid=LO:HI:N when LO < 0")
    q = sub.add_parser("quantile", parents=[law, out], help="quantiles at levels in (0, 1)")
    q.add_argument("--p", type=float, nargs="+", required=True, help="levels in (0, 1)")
    s = sub.add_parser("sample", parents=[law, out], help="seeded inverse-transform draws")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--seed", type=int, default=0)
    sub.add_parser("modes", parents=[law, out], help="mode report from the mode theorems")

    ph = sub.add_parser("phase-diagram", parents=[out],
                        help="modality over an (alpha, rho) grid")
    ph.add_argument("--family", required=True, choices=[f.value for f in Family])
    ph.add_argument("--na", type=_positive_int, default=50,
                    help="alpha values 2i/na, i = 1..na")
    ph.add_argument("--nr", type=_positive_int, default=50,
                    help="rho values j/(nr-1), j = 0..nr-1")

    v = sub.add_parser("verify", help="run self-verification suites")
    v.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    v.add_argument("--inject-fault", type=float, default=None, help=argparse.SUPPRESS)
    return parser


def _params(args) -> StableParams:
    try:
        return StableParams(args.family, args.alpha, args.rho)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write_csv(stream, header: Sequence[str], rows) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _write_json(stream, obj) -> None:
    stream.write(json.dumps(_json_safe(obj), indent=2) + "\n")


def cmd_info(args, out) -> int:
    dist = StableDistribution(_params(args))
    _write_json(out, {
        "params": params_dict(dist.params),
        "decomposition": dist.decompose().to_dict(),
        "modes": dist.modes().to_dict(),
    })
    return EXIT_OK


def cmd_values(args, out) -> int:
    dist = StableDistribution(_params(args))
    xs = np.asarray(args.x if args.x is not None else args.grid, dtype=float)
    if args.command == "pdf":
        vals = [dist.pdf(x) for x in xs]
    else:
        vals = list(dist.cdf(xs))
    if args.format == "json":
        _write_json(out, {
            "params": params_dict(dist.params),
            "points": [{"x": float(x), args.command: v} for x, v in zip(xs, vals)],
        })
    else:
        _write_csv(out, ("x", args.command), ((fmt(x), fmt(v)) for x, v in zip(xs, vals)))
    return EXIT_OK


def cmd_quantile(args, out) -> int:
    dist = StableDistribution(_params(args))
    ps = np.asarray(args.p, dtype=float)
    if not np.all((ps > 0.0) & (ps < 1.0)):
        raise UsageError("quantile levels must lie in the open interval (0, 1)")
    qs = np.atleast_1d(dist.quantile(ps))
    if args.format == "json":
        _write_json(out, {
            "params": params_dict(dist.params),
            "points": [{"p": float(p), "quantile": float(q)} for p, q in zip(ps, qs)],
        })
    else:
        _write_csv(out, ("p", "quantile"), ((fmt(p), fmt(q)) for p, q in zip(ps, qs)))
    return EXIT_OK


def cmd_sample(args, out) -> int:
    dist = StableDistribution(_params(args))
    draws = dist.sample(args.n, seed=args.seed)
    if args.format == "json":
        _write_json(out, {"params": params_dict(dist.params), "seed": args.seed,
                          "samples": [float(v) for v in draws]})
    else:
        out.write("".join(fmt(v) + "\n" for v in draws))
    return EXIT_OK


def cmd_modes(args, out) -> int:
    dist = StableDistribution(_params(args))
    report = dist.modes()
    if args.format == "csv":
        _write_csv(out, ("location", "kind"),
                   ((fmt(m.location), m.kind.value) for m in report.modes))
    else:
        _write_json(out, {"params": params_dict(dist.params), **report.to_dict()})
    return EXIT_OK


def phase_rows(family: str, na: int, nr: int):
    """``(alpha, rho, report)`` over the grid, skipping undefined cells.

    The monotone law with alpha = 1 exists only for rho = 1/2, so the other
    cells of that column are left out.
    """
    rhos = [0.5] if nr == 1 else [j / (nr - 1) for j in range(nr)]
    for i in range(1, na + 1):
        alpha = 2.0 * i / na
        for rho in rhos:
            if family == Family.MONOTONE.value and alpha == 1.0 and rho != 0.5:
                continue
            yield alpha, rho, StableDistribution(StableParams(family, alpha, rho)).modes()


def cmd_phase(args, out) -> int:
    rows = []
    for alpha, rho, report in phase_rows(args.family, args.na, args.nr):
        locs = [fmt(x) for x in report.locations]
        rows.append((alpha, rho, report, locs + [""] * (2 - len(locs))))
    if args.format == "json":
        _write_json(out, [
            {"alpha": a, "rho": r, "theta": StableParams(args.family, a, r).theta,
             **rep.to_dict()}
            for a, r, rep, _ in rows
        ])
    else:
        _write_csv(out, ("alpha", "rho", "modality", "mode1", "mode2"),
                   ((fmt(a), fmt(r), rep.modality.value, *locs) for a, r, rep, locs in rows))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        tolerance()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    scale = args.inject_fault
    guard = _fault.scaled_densities(scale) if scale is not None else contextlib.nullcontext()
    with guard:
        results = run_suite(args.suite)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed} passed, {failed} failed\n")
    return EXIT_FAILED if failed else EXIT_OK


COMMANDS = {
    "info": cmd_info, "pdf": cmd_values, "cdf": cmd_values, "quantile": cmd_quantile,
    "sample": cmd_sample, "modes": cmd_modes, "phase-diagram": cmd_phase,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"stable-laws: error: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
