"""Unified distribution object: pdf, cdf, quantile, sampling and modes."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from .boolean import boolean_decomposition, boolean_modes
from .monotone import monotone_decomposition, monotone_modes
from .numerics import Segment, quadrature_spec, segments
from .params import Family, StableParams
from .structures import Decomposition, Divergent, ModeReport

TABLE_NODES = 2048
NEWTON_STEPS = 60

_GL_X, _GL_W = np.polynomial.legendre.leggauss(8)


@dataclass(frozen=True)
class _Block:
    """One entry of the cdf table: an atom, or one mapped piece segment."""

    x_lo: float
    x_hi: float
    mass: float
    segment: Segment | None = None
    spline: CubicHermiteSpline | None = None
    cum: np.ndarray | None = None

    @property
    def is_atom(self) -> bool:
        return self.segment is None


def _fill_nonfinite(g: np.ndarray) -> np.ndarray:
    """Replace inf/nan node values (0 * inf at singular ends) by extrapolation."""
    bad = ~np.isfinite(g)
    if not bad.any():
        return g
    g = g.copy()
    good = np.flatnonzero(~bad)
    if good.size < 2:
        raise ValueError("integrand is non-finite almost everywhere on the table")
    for i in np.flatnonzero(bad):
        j = good[np.argsort(np.abs(good - i))[:2]]
        j.sort()
        slope = (g[j[1]] - g[j[0]]) / (j[1] - j[0])
        g[i] = max(g[j[0]] + slope * (i - j[0]), 0.0)
    return g


def _segment_block(piece, seg: Segment, nodes: int) -> _Block:
    g = seg.integrand(piece.pdf_values, piece.pdf_near)
    u = np.linspace(0.0, 1.0, nodes)
    h = u[1] - u[0]
    gauss_u = u[:-1, None] + 0.5 * h * (_GL_X[None, :] + 1.0)
    gauss_g = np.asarray(g(gauss_u.ravel()), dtype=float).reshape(gauss_u.shape)
    gauss_g = np.where(np.isfinite(gauss_g), gauss_g, 0.0)
    cells = 0.5 * h * (gauss_g @ _GL_W)
    cum = np.concatenate([[0.0], np.cumsum(cells)])
    slopes = _fill_nonfinite(np.asarray(g(u), dtype=float))
    spline = CubicHermiteSpline(u, cum, slopes)
    return _Block(seg.a, seg.b, float(cum[-1]), seg, spline, cum)


def _invert_block(block: _Block, target: np.ndarray) -> np.ndarray:
    """Solve spline(u) = target on a block by safeguarded Newton; returns x."""
    cum, spline = block.cum, block.spline
    n = cum.size
    nodes = np.linspace(0.0, 1.0, n)
    i = np.clip(np.searchsorted(cum, target, side="left") - 1, 0, n - 2)
    lo, hi = nodes[i], nodes[i + 1]
    c_lo, c_hi = cum[i], cum[i + 1]
    width = np.where(c_hi > c_lo, c_hi - c_lo, 1.0)
    u = lo + (hi - lo) * np.clip((target - c_lo) / width, 0.0, 1.0)
    deriv = spline.derivative()
    for _ in range(NEWTON_STEPS):
        r = spline(u) - target
        lo = np.where(r < 0, u, lo)
        hi = np.where(r > 0, u, hi)
        d = deriv(u)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = u - r / d
        ok = np.isfinite(step) & (step > lo) & (step < hi)
        new = np.where(ok, step, 0.5 * (lo + hi))
        if np.all(np.abs(new - u) <= 4e-16):
            u = new
            break
        u = new
    return np.asarray(block.segment.x(u), dtype=float)


class StableDistribution:
    """A Boolean or monotone stable law with pdf, cdf, quantile and sampling.

    The decomposition and the cdf table are built on first use. The table is
    filled once under a lock, so instances may be shared between threads.
    """

    def __init__(self, params: StableParams, table_nodes: int = TABLE_NODES):
        if table_nodes < 16:
            raise ValueError("table_nodes must be at least 16")
        self.params = params
        self._nodes = table_nodes
        self._lock = threading.Lock()
        self._blocks: tuple[_Block, ...] | None = None

    def __repr__(self) -> str:
        return f"StableDistribution({self.params})"

    @classmethod
    def of(cls, family: Family | str, alpha: float, rho: float) -> "StableDistribution":
        return cls(StableParams(family, alpha, rho))

    @cached_property
    def decomposition(self) -> Decomposition:
        if self.params.family is Family.BOOLEAN:
            return boolean_decomposition(self.params)
        return monotone_decomposition(self.params)

    def decompose(self) -> Decomposition:
        return self.decomposition

    def modes(self) -> ModeReport:
        if self.params.family is Family.BOOLEAN:
            return boolean_modes(self.params)
        return monotone_modes(self.params)

    @property
    def support(self) -> tuple[float, float]:
        """Smallest closed interval carrying all the mass."""
        d = self.decomposition
        los = [p.support[0] for p in d.pieces] + [a.location for a in d.atoms]
        his = [p.support[1] for p in d.pieces] + [a.location for a in d.atoms]
        return min(los), max(his)

    # -- density -----------------------------------------------------------

    def pdf(self, x: float) -> float | Divergent:
        """Density of the absolutely continuous part; DIVERGENT where it blows up."""
        return self.decomposition.pdf(float(x))

    def pdf_values(self, x) -> np.ndarray:
        """Vectorized density with ``inf`` at divergence points."""
        return self.decomposition.pdf_values(x)

    # -- cdf table ---------------------------------------------------------

    def _table(self) -> tuple[_Block, ...]:
        blocks = self._blocks
        if blocks is None:
            with self._lock:
                if self._blocks is None:
                    self._blocks = self._build_table()
                blocks = self._blocks
        return blocks

    def _build_table(self) -> tuple[_Block, ...]:
        d = self.decomposition
        blocks: list[_Block] = [
            _Block(a.location, a.location, a.weight) for a in d.atoms
        ]
        for piece in d.pieces:
            lo, hi = piece.support
            for atom in d.atoms:
                if lo < atom.location < hi:
                    raise ValueError("atoms inside a density piece are not supported")
            for seg in segments(lo, hi, quadrature_spec(piece)):
                blocks.append(_segment_block(piece, seg, self._nodes))
        # an atom at a piece endpoint sorts before the piece starting there
        blocks.sort(key=lambda b: (b.x_lo, not b.is_atom))
        return tuple(blocks)

    def cdf(self, x):
        """``P(X <= x)``; scalar in, float out, array in, array out."""
        scalar = np.ndim(x) == 0
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        for b in self._table():
            if b.is_atom:
                out += np.where(x >= b.x_lo, b.mass, 0.0)
                continue
            full = x >= b.x_hi
            part = (x > b.x_lo) & ~full
            out += np.where(full, b.mass, 0.0)
            if part.any():
                u = b.segment.u(np.where(part, x, b.x_lo))
                out += np.where(part, np.clip(b.spline(u), 0.0, b.mass), 0.0)
        out = np.clip(out, 0.0, 1.0)
        return float(out) if scalar else out

    # -- quantile and sampling --------------------------------------------

    def _quantile_array(self, p: np.ndarray) -> np.ndarray:
        blocks = self._table()
        masses = np.array([b.mass for b in blocks])
        upper = np.cumsum(masses)
        base = upper - masses
        # p in (base, upper] belongs to the block; p beyond the total goes last
        idx = np.clip(np.searchsorted(upper, p, side="left"), 0, len(blocks) - 1)
        out = np.empty_like(p)
        for k in np.unique(idx):
            sel = idx == k
            b = blocks[k]
            if b.is_atom:
                out[sel] = b.x_lo
            else:
                target = np.clip(p[sel] - base[k], 0.0, b.mass)
                out[sel] = _invert_block(b, target)
        return out

    def quantile(self, p):
        """Generalized inverse ``inf{x : cdf(x) >= p}`` for p in (0, 1)."""
        scalar = np.ndim(p) == 0
        arr = np.asarray(p, dtype=float)
        if not np.all((arr > 0.0) & (arr < 1.0)):
            raise ValueError("quantile levels must lie in the open interval (0, 1)")
        out = self._quantile_array(np.atleast_1d(arr).ravel()).reshape(arr.shape)
        return float(out) if scalar else out

    def sample(self, n: int, seed: int | None = None) -> np.ndarray:
        """``n`` i.i.d. draws by inverse transform of seeded uniforms."""
        if n < 1:
            raise ValueError("n must be at least 1")
        rng = np.random.default_rng(seed)
        u = rng.random(n)
        # uniforms in [0, 1); map 0 to the smallest positive level
        u = np.where(u > 0.0, u, np.finfo(float).tiny)
        return self._quantile_array(u)

    def ks_distance(self, samples) -> float:
        """Exact ``sup |F_n - F|`` for a sample, with atoms as jumps of F."""
        x = np.sort(np.asarray(samples, dtype=float))
        n = x.size
        if n == 0:
            raise ValueError("empty sample")
        values, counts = np.unique(x, return_counts=True)
        emp_hi = np.cumsum(counts) / n
        emp_lo = emp_hi - counts / n
        F_hi = self.cdf(values)
        jumps = np.zeros_like(values)
        for atom in self.decomposition.atoms:
            jumps += np.where(values == atom.location, atom.weight, 0.0)
        F_lo = F_hi - jumps
        return float(max(np.abs(emp_hi - F_hi).max(), np.abs(emp_lo - F_lo).max()))

    # -- mode search helpers ----------------------------------------------

    def oracle_window(self, tail: float = 1e-4) -> tuple[float, float]:
        """Finite window holding all modes: central quantiles, clipped to the support."""
        lo_s, hi_s = self.support
        q_lo = self.quantile(tail)
        q_hi = self.quantile(1.0 - tail)
        span = max(abs(q_lo), abs(q_hi), 2.0)
        lo = max(lo_s, -span)
        hi = min(hi_s, span)
        return lo, hi

    def singular_markers(self) -> tuple[float, ...]:
        """Points where a piece may diverge or end: 0 and the ends of finite supports."""
        pts = {0.0}
        for piece in self.decomposition.pieces:
            pts.update(v for v in piece.support if math.isfinite(v))
        return tuple(sorted(pts))

