"""Root finding, singularity-aware quadrature and the grid mode oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate as sp_integrate, signal

from .structures import DIVERGENT, Divergent

MAX_ITER = 200
_TINY = np.finfo(float).tiny


class NoSignChangeError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


class QuadratureError(RuntimeError):
    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} (achieved error estimate {achieved:.3e})")
        self.achieved = achieved


def bracketed_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    fprime: Callable[[float], float] | None = None,
) -> float:
    """Root of ``f`` in ``[lo, hi]`` by bisection with a Newton polish.

    Newton steps are taken only when ``fprime`` is given and the step stays
    inside the current bracket; otherwise the bracket is bisected. Stops
    when the bracket is narrower than ``tol`` or ``f`` vanishes exactly.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise NoSignChangeError(f"f has the same sign at {lo} and {hi}")
    x = 0.5 * (lo + hi)
    for _ in range(MAX_ITER):
        fx = f(x)
        if fx == 0.0:
            return x
        if (fx < 0) == (flo < 0):
            lo, flo = x, fx
        else:
            hi = x
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
        step_ok = False
        if fprime is not None:
            d = fprime(x)
            if d != 0.0 and math.isfinite(d):
                cand = x - fx / d
                if lo < cand < hi:
                    if abs(cand - x) <= tol:
                        return cand
                    x, step_ok = cand, True
        if not step_ok:
            x = 0.5 * (lo + hi)
    raise ConvergenceError(f"no convergence after {MAX_ITER} iterations")


def golden_section_max(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-6
) -> float:
    """Location of the maximum of a unimodal ``f`` on ``[a, b]``."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c, d = b - invphi * (b - a), a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


# ---------------------------------------------------------------------------
# quadrature


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances plus power-law hints at the two ends of the interval.

    ``left_exponent``/``right_exponent``: at a finite end the integrand
    behaves like ``dist**p`` (a substitution is used when p < 0); at an
    infinite end like ``|x|**p`` with p < -1.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    left_exponent: float | None = None
    right_exponent: float | None = None

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class Segment:
    """Monotone map u in [0, 1] -> x in [a, b] that regularizes an end.

    kinds: ``linear``; ``left_power``/``right_power`` (x - a = L u**k near a
    singular finite end); ``right_tail``/``left_tail`` (an infinite end, with
    the tail exponent folded into ``k``).
    """

    kind: str
    a: float
    b: float
    k: float = 1.0

    def x(self, u):
        u = np.asarray(u, dtype=float)
        a, b, k = self.a, self.b, self.k
        with np.errstate(divide="ignore", over="ignore"):
            if self.kind == "linear":
                return a + (b - a) * u
            if self.kind == "left_power":
                return a + (b - a) * u**k
            if self.kind == "right_power":
                return b - (b - a) * (1.0 - u) ** k
            if self.kind == "right_tail":
                return a - 1.0 + (1.0 - u) ** (-1.0 / k)
            return b + 1.0 - u ** (-1.0 / k)

    def dxdu(self, u):
        u = np.asarray(u, dtype=float)
        a, b, k = self.a, self.b, self.k
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            if self.kind == "linear":
                return np.full_like(u, b - a)
            if self.kind == "left_power":
                return (b - a) * k * u ** (k - 1.0)
            if self.kind == "right_power":
                return (b - a) * k * (1.0 - u) ** (k - 1.0)
            if self.kind == "right_tail":
                return (1.0 / k) * (1.0 - u) ** (-1.0 / k - 1.0)
            return (1.0 / k) * u ** (-1.0 / k - 1.0)

    def u(self, x):
        """Inverse map, clipped to [0, 1]."""
        x = np.asarray(x, dtype=float)
        a, b, k = self.a, self.b, self.k
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if self.kind == "linear":
                u = (x - a) / (b - a)
            elif self.kind == "left_power":
                u = (np.maximum(x - a, 0.0) / (b - a)) ** (1.0 / k)
            elif self.kind == "right_power":
                u = 1.0 - (np.maximum(b - x, 0.0) / (b - a)) ** (1.0 / k)
            elif self.kind == "right_tail":
                u = 1.0 - np.maximum(x - a + 1.0, 1.0) ** (-k)
            else:
                u = np.maximum(b + 1.0 - x, 1.0) ** (-k)
        return np.clip(u, 0.0, 1.0)

    def distance(self, u):
        """Distance from x(u) to the singular end of a power segment."""
        u = np.asarray(u, dtype=float)
        if self.kind == "left_power":
            return (self.b - self.a) * u**self.k
        return (self.b - self.a) * (1.0 - u) ** self.k

    def integrand(self, f: Callable, near: Callable | None = None) -> Callable:
        """``g(u) = f(x(u)) * x'(u)``.

        ``near(side, d)``, when given, evaluates the integrand at distance d
        from the ``"left"``/``"right"`` end; power segments use it so that
        points within rounding distance of a singular end stay resolved.
        """
        if near is not None and self.kind in ("left_power", "right_power"):
            side = "left" if self.kind == "left_power" else "right"
            span, k = self.b - self.a, self.k

            def g(u):
                # the jacobian is written through d so that an underflowed
                # distance, clamped to the smallest normal, keeps g at its limit
                d = np.maximum(self.distance(u), _TINY)
                with np.errstate(invalid="ignore", over="ignore"):
                    return near(side, d) * (k * span * (d / span) ** ((k - 1.0) / k))

            return g

        def g(u):
            with np.errstate(invalid="ignore"):
                return f(self.x(u)) * self.dxdu(u)

        return g


def _finite_end(kind: str, a: float, b: float, p: float | None) -> Segment:
    if p is None or p >= 0.0:
        return Segment("linear", a, b)
    if p <= -1.0:
        raise ValueError(f"non-integrable endpoint exponent {p}")
    return Segment(kind, a, b, 1.0 / (p + 1.0))


def _tail(kind: str, a: float, b: float, p: float | None) -> Segment:
    if p is None:
        p = -2.0
    if p >= -1.0:
        raise ValueError(f"non-integrable tail exponent {p}")
    return Segment(kind, a, b, -p - 1.0)


def segments(a: float, b: float, spec: QuadratureSpec) -> list[Segment]:
    """Split ``[a, b]`` into regularizing segments per the end hints."""
    if not a < b:
        raise ValueError(f"empty interval [{a}, {b}]")
    lp, rp = spec.left_exponent, spec.right_exponent
    fa, fb = math.isfinite(a), math.isfinite(b)
    if fa and fb:
        m = 0.5 * (a + b)
        return [_finite_end("left_power", a, m, lp), _finite_end("right_power", m, b, rp)]
    if fa:
        return [_finite_end("left_power", a, a + 1.0, lp), _tail("right_tail", a + 1.0, b, rp)]
    if fb:
        return [_tail("left_tail", a, b - 1.0, lp), _finite_end("right_power", b - 1.0, b, rp)]
    return [
        _tail("left_tail", a, -1.0, lp),
        Segment("linear", -1.0, 1.0),
        _tail("right_tail", 1.0, b, rp),
    ]


def integrate(
    f: Callable, a: float, b: float, spec: QuadratureSpec = QuadratureSpec(),
    full_output: bool = False, near: Callable | None = None,
):
    """Integral of a vectorized ``f`` over ``[a, b]`` to ``spec.abs_tol``.

    Returns the value, or ``(value, error_estimate)`` with ``full_output``.
    Raises :class:`QuadratureError` if the error estimate exceeds abs_tol.
    """
    segs = segments(a, b, spec)
    total, err = 0.0, 0.0
    for seg in segs:
        g = seg.integrand(f, near)
        val, e, *_ = sp_integrate.quad(
            lambda u: float(g(u)), 0.0, 1.0,
            epsabs=spec.abs_tol / (4 * len(segs)), epsrel=spec.rel_tol,
            limit=500, full_output=1,
        )
        total += val
        err += e
    if not (err <= spec.abs_tol and math.isfinite(total)):
        raise QuadratureError(f"quadrature on [{a}, {b}] missed tolerance", err)
    return (total, err) if full_output else total


def quadrature_spec(piece, abs_tol: float = 1e-10, rel_tol: float = 1e-10) -> QuadratureSpec:
    left, right = piece.endpoint_exponents()
    return QuadratureSpec(abs_tol, rel_tol, left, right)


def integrate_density(piece, spec: QuadratureSpec | None = None, full_output: bool = False):
    """Mass of one density piece; hints default to the piece's own exponents."""
    spec = spec or quadrature_spec(piece)
    lo, hi = piece.support
    return integrate(piece.pdf_values, lo, hi, spec, full_output=full_output,
                     near=piece.pdf_near)


# ---------------------------------------------------------------------------
# grid mode oracle


def _probe_marker(density, m, lo, hi):
    """Classify a marker point: (is_divergent, limiting value).

    The density is sampled at distances 10**-k from ``m`` on each side, down
    to the float resolution around ``m`` (1e-300 at the origin). Increments
    that keep growing mean divergence; a finite cusp has shrinking ones.
    """
    k_max = 300 if m == 0.0 else int(-math.log10(np.spacing(abs(m)))) - 1
    ks = np.arange(3, k_max + 1, dtype=float)
    divergent = False
    best = float(density(np.array([m]))[0])
    for side in (-1.0, 1.0):
        pts = m + side * 10.0 ** (-ks)
        if not np.all((pts >= lo) & (pts <= hi)):
            continue
        d = density(pts)
        if not np.all(np.isfinite(d)):
            continue
        inc = np.diff(d)[-3:]
        if np.all(inc > 0) and inc[2] > inc[1] > inc[0]:
            divergent = True
        best = max(best, float(d[-1]))
    return divergent, best


def _merge_flat_peaks(idx: list[int], values: np.ndarray, rel: float) -> list[list[int]]:
    """Group neighbouring peaks not separated by a dip deeper than ``rel``.

    Rounding noise on a flat top yields several tied grid maxima; they are
    one maximum of the underlying density.
    """
    clusters: list[list[int]] = []
    for i in idx:
        if clusters:
            j = clusters[-1][-1]
            floor = values[j:i + 1].min()
            if floor >= (1.0 - rel) * min(values[i], values[j]):
                clusters[-1].append(i)
                continue
        clusters.append([i])
    return clusters


def grid_mode_oracle(
    density: Callable,
    window: tuple[float, float],
    coarse_n: int = 10_000,
    refine_tol: float = 1e-6,
    markers: Sequence[float] = (),
    rel_prominence: float = 1e-9,
) -> list[tuple[float, float | Divergent]]:
    """All strict local maxima of ``density`` on ``window`` by brute force.

    A uniform grid plus log-spaced grids approaching every marker (and 0)
    from both sides is scanned; interior maxima are polished by golden
    section. Markers are singular points: they are probed one-sidedly and a
    divergent one is reported with :data:`DIVERGENT` as its value.
    ``density`` must be vectorized and non-negative.
    """
    lo, hi = map(float, window)
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError(f"window must be a finite interval, got {window}")
    if coarse_n < 10:
        raise ValueError("coarse_n too small")
    markers = sorted({float(m) for m in markers if lo <= m <= hi})
    span = hi - lo
    pieces = [np.linspace(lo, hi, coarse_n), np.array(markers)]
    centers = set(markers) | ({0.0} if lo < 0.0 < hi else set())
    offsets = np.logspace(-13, math.log10(span), max(coarse_n // 2, 200))
    for c in centers:
        pieces += [c - offsets, c + offsets]
    grid = np.unique(np.concatenate(pieces))
    grid = grid[(grid >= lo) & (grid <= hi)]
    vals = np.asarray(density(grid), dtype=float)
    if np.any(np.isnan(vals)) or np.any(vals < 0):
        raise ValueError("density produced NaN or negative values on the window")

    finite = vals[np.isfinite(vals)]
    cap = (finite.max() if finite.size else 1.0) * 10.0 + 1.0
    capped = np.where(np.isfinite(vals), vals, cap)
    padded = np.concatenate([[-1.0], capped, [-1.0]])
    peaks, props = signal.find_peaks(padded, prominence=0.0)
    marker_set = set(markers)
    keep = [
        i for i, prom in zip(peaks - 1, props["prominences"])
        if capped[i] > 0.0 and prom > rel_prominence * capped[i]
    ]
    out: list[tuple[float, float | Divergent]] = []
    for cluster in _merge_flat_peaks(keep, capped, rel_prominence):
        on_marker = [i for i in cluster if grid[i] in marker_set]
        if on_marker:
            x = grid[on_marker[0]]
            div, lim = _probe_marker(density, x, lo, hi)
            out.append((x, DIVERGENT if div or math.isinf(vals[on_marker[0]]) else lim))
            continue
        i = max(cluster, key=lambda j: capped[j])
        a = grid[max(i - 1, 0)]
        b = grid[min(i + 1, len(grid) - 1)]
        xm = golden_section_max(lambda s: float(density(np.array([s]))[0]), a, b, refine_tol)
        vm = float(density(np.array([xm]))[0])
        out.append((xm, DIVERGENT if math.isinf(vm) else vm))
    return out
