"""Self-verification suites: closed forms against independent numerics.

Each suite returns a list of :class:`CheckResult`. The suites compare

* closed-form densities and atoms with Stieltjes inversion of the
  reciprocal Cauchy transform (``stieltjes``),
* total mass with quadrature (``normalization``),
* the law at rho with the mirrored law at 1 - rho (``reflection``),
* the mode theorems with a brute-force grid scan (``modes``),
* analytic kernel derivatives with central differences (``derivatives``).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from . import _kernels
from .distribution import StableDistribution
from .numerics import QuadratureError, grid_mode_oracle, integrate_density
from .params import StableParams, alpha0
from .structures import DIVERGENT, Kernel, ModeKind, ModeReport
from .transforms import atom_weight_numeric, stieltjes_density

DEFAULT_TOL = 1e-6
TOL_ENV = "STABLE_LAWS_TOL"
STIELTJES_Y = 1e-8
STIELTJES_TOL = 1e-4
ATOM_TOL = 1e-3
REFLECTION_TOL = 1e-12
DERIVATIVE_TOL = 1e-5
MODE_LOC_TOL = 1e-3
SUITES = ("stieltjes", "normalization", "reflection", "modes", "derivatives")

# one or more representatives of every regime of both density propositions
PROPOSITION_CELLS: tuple[tuple[str, float, float], ...] = (
    ("boolean", 0.5, 0.0), ("boolean", 0.5, 0.3), ("boolean", 0.5, 1.0),
    ("boolean", 0.9, 0.7), ("boolean", 1.0, 0.0), ("boolean", 1.0, 0.3),
    ("boolean", 1.0, 0.5), ("boolean", 1.0, 1.0), ("boolean", 1.5, 0.0),
    ("boolean", 1.5, 0.4), ("boolean", 1.5, 1.0), ("boolean", 2.0, 0.5),
    ("monotone", 0.5, 0.0), ("monotone", 0.5, 0.6), ("monotone", 0.5, 1.0),
    ("monotone", 1.0, 0.5), ("monotone", 1.5, 0.0), ("monotone", 1.5, 0.3),
    ("monotone", 1.5, 1.0), ("monotone", 1.8, 0.5), ("monotone", 2.0, 0.2),
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {self.name}" + (f" ({self.detail})" if self.detail else "")


def tolerance() -> float:
    """Verification tolerance, overridable through ``STABLE_LAWS_TOL``."""
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ValueError(f"{TOL_ENV} must be a positive number, got {raw!r}") from None
    if not tol > 0:
        raise ValueError(f"{TOL_ENV} must be a positive number, got {raw!r}")
    return tol


def cells(extra: Iterable[tuple[str, float, float]] = ()) -> list[StableParams]:
    return [StableParams(f, a, r) for f, a, r in (*PROPOSITION_CELLS, *extra)]


# ---------------------------------------------------------------------------
# stieltjes


def stieltjes_points(dist: StableDistribution, n: int = 20, gap: float = 1e-2) -> np.ndarray:
    """``n`` test points on the support, kept ``gap`` away from 0, edges and atoms."""
    lo, hi = dist.support
    lo, hi = max(lo, -6.0), min(hi, 6.0)
    avoid = list(dist.singular_markers()) + [a.location for a in dist.decomposition.atoms]
    cand = np.linspace(lo, hi, 8 * n + 1)
    keep = [x for x in cand if all(abs(x - m) > gap for m in avoid)]
    keep = [x for x in keep if dist.pdf_values(x) > 0 or _in_support(dist, x)]
    idx = np.linspace(0, len(keep) - 1, n).round().astype(int)
    return np.asarray(keep)[idx]


def _in_support(dist, x) -> bool:
    return any(p.support[0] < x < p.support[1] for p in dist.decomposition.pieces)


def check_stieltjes(params: StableParams) -> list[CheckResult]:
    dist = StableDistribution(params)
    out = []
    if dist.decomposition.pieces:
        xs = stieltjes_points(dist)
        closed = dist.pdf_values(xs)
        inverted = np.array([stieltjes_density(params, x, STIELTJES_Y) for x in xs])
        err = float(np.max(np.abs(closed - inverted)))
        out.append(CheckResult("stieltjes", f"{params} density", err <= STIELTJES_TOL,
                               f"max error {err:.2e}"))
    for atom in dist.decomposition.atoms:
        w = atom_weight_numeric(params, atom.location)
        err = abs(w - atom.weight)
        out.append(CheckResult("stieltjes", f"{params} atom at {atom.location:.6g}",
                               err <= ATOM_TOL, f"residue {w:.6f} vs {atom.weight:.6f}"))
    return out


# ---------------------------------------------------------------------------
# normalization


def check_normalization(params: StableParams, tol: float | None = None) -> CheckResult:
    tol = tolerance() if tol is None else tol
    dist = StableDistribution(params)
    d = dist.decomposition
    try:
        mass = math.fsum(integrate_density(p) for p in d.pieces) + d.atom_mass
    except QuadratureError as exc:
        return CheckResult("normalization", str(params), False, str(exc))
    err = abs(mass - 1.0)
    return CheckResult("normalization", str(params), err <= tol, f"|mass - 1| = {err:.2e}")


# ---------------------------------------------------------------------------
# reflection


def check_reflection(params: StableParams) -> CheckResult:
    dist = StableDistribution(params)
    mirror = StableDistribution(params.reflected())
    xs = np.concatenate([np.linspace(-5.0, 5.0, 101), [-0.3, 0.3, 1e-6, -1e-6]])
    a, b = dist.pdf_values(xs), mirror.pdf_values(-xs)
    both_inf = np.isinf(a) & np.isinf(b)
    with np.errstate(invalid="ignore"):
        diff = np.where(both_inf, 0.0, np.abs(a - b))
    err = float(diff.max())
    atoms = sorted((x.location, x.weight) for x in dist.decomposition.atoms)
    mirrored = sorted((-x.location, x.weight) for x in mirror.decomposition.atoms)
    ok = err <= REFLECTION_TOL and atoms == mirrored
    return CheckResult("reflection", str(params), ok, f"max error {err:.2e}")


# ---------------------------------------------------------------------------
# modes


def oracle_modes(dist: StableDistribution, coarse_n: int = 10_000):
    """Grid-oracle maxima of the law, with atoms treated as infinite peaks."""
    atoms = [a.location for a in dist.decomposition.atoms]

    def density(x):
        vals = dist.pdf_values(x)
        for loc in atoms:
            vals = np.where(x == loc, np.inf, vals)
        return vals

    window = dist.oracle_window()
    markers = [m for m in (*dist.singular_markers(), *atoms) if window[0] <= m <= window[1]]
    return grid_mode_oracle(density, window, coarse_n=coarse_n, markers=markers)


def compare_modes(report: ModeReport, found) -> tuple[bool, str]:
    """Theorem report vs oracle maxima: same count, kinds and locations."""
    if len(found) != len(report.modes):
        return False, f"theorem {report.locations} vs oracle {[f[0] for f in found]}"
    worst = 0.0
    for mode, (loc, val) in zip(report.modes, found):
        singular = mode.kind in (ModeKind.DIVERGENT, ModeKind.ATOM)
        if singular != (val is DIVERGENT):
            return False, f"kind mismatch at {mode.location:.6g}"
        err = abs(loc - mode.location) / max(1.0, abs(mode.location))
        worst = max(worst, err)
        if err > MODE_LOC_TOL:
            return False, f"location {loc:.6g} vs {mode.location:.6g}"
    return True, f"{report.modality.value}, worst location error {worst:.1e}"


def check_modes(params: StableParams) -> CheckResult:
    dist = StableDistribution(params)
    ok, detail = compare_modes(dist.modes(), oracle_modes(dist))
    return CheckResult("modes", str(params), ok, detail)


def mode_cells() -> list[StableParams]:
    """Cells in every band of both theorems, including the band boundaries."""
    a0 = alpha0()
    out = [StableParams.boolean(a, r) for a in (0.3, 0.7, a0, 0.8, 0.95, 1.2, 1.7, 2.0)
           for r in (0.0, 0.5, 1.0)]
    out += [StableParams.boolean(0.9, r) for r in (0.05, 0.1, 0.9, 0.95)]
    out += [StableParams.boolean(1.0, r) for r in (0.2, 0.45, 0.8)]
    out += [StableParams.monotone(a, r) for a in (0.4, 0.8, 1.3, 1.7, 1.618033988749895, 2.0)
            for r in (0.0, 0.5, 1.0)]
    out += [StableParams.monotone(0.6, r) for r in (0.1, 0.3, 0.7, 0.9)]
    out += [StableParams.monotone(1.0, 0.5), StableParams.monotone(1.8, 0.2)]
    return out


# ---------------------------------------------------------------------------
# derivatives

KERNEL_FORMULAS: dict[Kernel, tuple[Callable, Callable]] = {
    Kernel.B_ALPHA: (_kernels.b_alpha, _kernels.b_alpha_dt),
    Kernel.B_ONE: (lambda t, a, r: _kernels.b_one(t, r), lambda t, a, r: _kernels.b_one_dt(t, r)),
    Kernel.MONOTONE_M: (_kernels.m_alpha, _kernels.m_alpha_dt),
}


def derivative_error(kernel: Kernel, alpha: float, angle: float, ts, h: float = 1e-6) -> np.ndarray:
    """Relative error of an analytic kernel derivative against central differences.

    The step is ``h * t``. Points where the log-derivative ``t f'/f`` is
    below 1e-2 are dropped: there the difference quotient measures rounding
    noise around a critical point rather than the formula.
    """
    f, df = KERNEL_FORMULAS[kernel]
    ts = np.asarray(ts, dtype=float)
    step = h * ts
    fd = (f(ts + step, alpha, angle) - f(ts - step, alpha, angle)) / (2.0 * step)
    exact = df(ts, alpha, angle)
    keep = np.abs(exact) * ts >= 1e-2 * f(ts, alpha, angle)
    return np.abs(fd - exact)[keep] / np.abs(exact)[keep]


def check_derivatives(params: StableParams) -> list[CheckResult]:
    dist = StableDistribution(params)
    ts = np.geomspace(0.05, 20.0, 10)
    out = []
    for piece in dist.decomposition.pieces:
        if piece.kernel not in KERNEL_FORMULAS:
            continue
        err = derivative_error(piece.kernel, piece.alpha, piece.angle, ts)
        worst = float(err.max()) if err.size else 0.0
        out.append(CheckResult(
            "derivatives", f"{params} {piece.kernel.value} {piece.orientation.value}",
            worst <= DERIVATIVE_TOL, f"max relative error {worst:.1e}",
        ))
    return out


CRITICAL_POINT_CELLS = (
    ("boolean", 0.8, 0.05), ("boolean", 0.9, 0.97), ("boolean", 1.0, 0.2),
    ("boolean", 1.0, 0.8), ("boolean", 1.3, 0.1), ("boolean", 1.3, 0.5),
    ("boolean", 1.7, 0.9), ("monotone", 0.5, 0.9), ("monotone", 0.5, 0.1),
    ("monotone", 1.3, 0.3), ("monotone", 1.7, 0.5), ("monotone", 1.9, 0.8),
)


def check_critical_points(tol: float = 1e-8) -> list[CheckResult]:
    """Closed-form finite modes (x_+-, u_+-, v_+-) zero the derivative formulas."""
    out = []
    for p in cells(CRITICAL_POINT_CELLS):
        dist = StableDistribution(p)
        for mode in dist.modes().modes:
            if mode.kind is not ModeKind.CONTINUOUS or mode.location == 0.0:
                continue
            loc = mode.location
            piece = next(q for q in dist.decomposition.pieces
                         if q.support[0] < loc < q.support[1])
            if piece.kernel not in KERNEL_FORMULAS:
                continue
            _, df = KERNEL_FORMULAS[piece.kernel]
            v = abs(float(df(abs(loc), piece.alpha, piece.angle)))
            out.append(CheckResult("modes", f"{p} derivative at {loc:.6g}", v <= tol, f"{v:.1e}"))
    return out


# ---------------------------------------------------------------------------


def run_suite(name: str) -> list[CheckResult]:
    """Run one suite by name, or every suite for ``"all"``."""
    if name == "all":
        return [r for s in SUITES for r in run_suite(s)]
    if name == "stieltjes":
        return [r for p in cells() for r in check_stieltjes(p)]
    if name == "normalization":
        return [check_normalization(p) for p in cells()]
    if name == "reflection":
        return [check_reflection(p) for p in cells()]
    if name == "modes":
        extra = [q for q in mode_cells() if q not in cells()]
        return [check_modes(p) for p in (*cells(), *extra)] + check_critical_points()
    if name == "derivatives":
        return [r for p in cells() for r in check_derivatives(p)]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
