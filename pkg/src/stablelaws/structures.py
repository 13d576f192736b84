"""Domain types shared by both laws: density pieces, atoms, decompositions
and mode reports."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import _fault, _kernels


class Divergent:
    """Marker for a density value that tends to +infinity.

    A singleton; ``float(DIVERGENT)`` is ``inf`` and it prints as ``inf``.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __float__(self) -> float:
        return math.inf

    def __repr__(self) -> str:
        return "inf"

    __str__ = __repr__

    def __reduce__(self):
        return (Divergent, ())


DIVERGENT = Divergent()


class Kernel(str, enum.Enum):
    B_ALPHA = "B_alpha"
    B_ONE = "B_1"
    MONOTONE_M = "M_alpha"
    MONOTONE_EDGE = "M_edge"
    CAUCHY = "cauchy"
    ARCSINE = "arcsine"


class Orientation(str, enum.Enum):
    DIRECT = "direct"
    REFLECTED = "reflected"


@dataclass(frozen=True)
class DensityPiece:
    """One absolutely continuous piece of a law.

    ``support`` is the interval in x. A reflected piece evaluates its kernel
    at ``-x``. ``angle`` is theta for the B_alpha and M_alpha kernels, rho for
    B_1, and None where the kernel has no angle.
    """

    kernel: Kernel
    support: tuple[float, float]
    alpha: float
    angle: float | None = None
    orientation: Orientation = Orientation.DIRECT

    def kernel_values(self, t):
        k = self.kernel
        if k is Kernel.B_ALPHA:
            return _kernels.b_alpha(t, self.alpha, self.angle)
        if k is Kernel.B_ONE:
            return _kernels.b_one(t, self.angle)
        if k is Kernel.MONOTONE_M:
            return _kernels.m_alpha(t, self.alpha, self.angle)
        if k is Kernel.MONOTONE_EDGE:
            return _kernels.monotone_edge(t, self.alpha)
        if k is Kernel.CAUCHY:
            return _kernels.cauchy(t)
        return _kernels.arcsine(t)

    def kernel_derivative(self, t):
        """d/dt of the kernel (t > 0), for the kernels with a closed form."""
        k = self.kernel
        if k is Kernel.B_ALPHA:
            return _kernels.b_alpha_dt(t, self.alpha, self.angle)
        if k is Kernel.B_ONE:
            return _kernels.b_one_dt(t, self.angle)
        if k is Kernel.MONOTONE_M:
            return _kernels.m_alpha_dt(t, self.alpha, self.angle)
        raise NotImplementedError(f"no derivative formula for {k.value}")

    def pdf_values(self, x):
        """Density of this piece at x; zero off the closed support."""
        x = np.asarray(x, dtype=float)
        lo, hi = self.support
        inside = (x >= lo) & (x <= hi)
        t = -x if self.orientation is Orientation.REFLECTED else x
        if self.kernel in (Kernel.CAUCHY, Kernel.ARCSINE):
            t_eval = np.where(inside, t, 0.0)
        else:
            t_eval = np.where(inside, np.abs(t), 0.0)
        vals = self.kernel_values(t_eval)
        return np.where(inside, vals * _fault.density_scale, 0.0)

    def pdf_near(self, side: str, d):
        """Density at distance ``d`` inside the ``"left"``/``"right"`` end."""
        d = np.asarray(d, dtype=float)
        lo, hi = self.support
        edge_end = "right" if self.orientation is Orientation.DIRECT else "left"
        if self._has_gap(side, edge_end):
            if self.kernel is Kernel.ARCSINE:
                vals = _kernels.arcsine_gap(d)
            else:
                vals = _kernels.monotone_edge_gap(d, self.alpha)
            return vals * _fault.density_scale
        return self.pdf_values(lo + d if side == "left" else hi - d)

    def _has_gap(self, side: str, edge_end: str) -> bool:
        if self.kernel is Kernel.ARCSINE:
            return True
        return self.kernel is Kernel.MONOTONE_EDGE and side == edge_end

    def endpoint_exponents(self) -> tuple[float, float]:
        """Power-law exponents of the density at (left, right) support ends.

        At a finite end the density behaves like ``dist**p``; at an infinite
        end like ``|x|**p``.
        """
        a, k = self.alpha, self.kernel
        if k is Kernel.CAUCHY:
            return (-2.0, -2.0)
        if k is Kernel.ARCSINE:
            return (-0.5, -0.5)
        if k is Kernel.B_ALPHA:
            near, far = a - 1.0, -a - 1.0
        elif k is Kernel.B_ONE:
            near, far = 0.0, -2.0
        elif k is Kernel.MONOTONE_M:
            near, far = 0.0, -a - 1.0
        else:
            near, far = 0.0, -1.0 / a
        if self.orientation is Orientation.DIRECT:
            return (near, far)
        return (far, near)

    def to_dict(self) -> dict:
        return {
            "kernel": self.kernel.value,
            "support": [_json_float(v) for v in self.support],
            "alpha": self.alpha,
            "angle": self.angle,
            "orientation": self.orientation.value,
        }


@dataclass(frozen=True)
class Atom:
    location: float
    weight: float

    def __post_init__(self):
        if not (0.0 < self.weight <= 1.0):
            raise ValueError(f"atom weight must lie in (0, 1], got {self.weight}")

    def to_dict(self) -> dict:
        return {"location": self.location, "weight": self.weight}


@dataclass(frozen=True)
class Decomposition:
    """Lebesgue-Jordan decomposition: a.c. pieces plus atoms."""

    pieces: tuple[DensityPiece, ...] = ()
    atoms: tuple[Atom, ...] = ()

    def __post_init__(self):
        spans = sorted(p.support for p in self.pieces)
        for (_, hi), (lo, _) in zip(spans, spans[1:]):
            if lo < hi:
                raise ValueError("density pieces must have disjoint supports")
        if sum(a.weight for a in self.atoms) > 1.0 + 1e-12:
            raise ValueError("atom weights exceed total mass 1")

    @property
    def atom_mass(self) -> float:
        return math.fsum(a.weight for a in self.atoms)

    def pdf_values(self, x):
        """Density at x, with ``inf`` where it diverges.

        At a point shared by two pieces the larger one-sided limit is used,
        so the result is the upper semicontinuous version of the density.
        """
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        for piece in self.pieces:
            out = np.maximum(out, piece.pdf_values(x))
        return out

    def pdf(self, x: float) -> float | Divergent:
        v = float(self.pdf_values(x))
        return DIVERGENT if math.isinf(v) else v

    def to_dict(self) -> dict:
        return {
            "pieces": [p.to_dict() for p in self.pieces],
            "atoms": [a.to_dict() for a in self.atoms],
        }


class Modality(str, enum.Enum):
    UNIMODAL = "Unimodal"
    BIMODAL = "Bimodal"


class ModeKind(str, enum.Enum):
    CONTINUOUS = "continuous-peak"
    DIVERGENT = "divergent-peak"
    ATOM = "atom"


@dataclass(frozen=True)
class Mode:
    location: float
    kind: ModeKind

    def to_dict(self) -> dict:
        return {"location": self.location, "kind": self.kind.value}


@dataclass(frozen=True)
class ModeReport:
    modes: tuple[Mode, ...] = field(default_factory=tuple)

    def __post_init__(self):
        locs = [m.location for m in self.modes]
        if not 1 <= len(locs) <= 2:
            raise ValueError("a mode report lists one or two modes")
        if any(b <= a for a, b in zip(locs, locs[1:])):
            raise ValueError(f"mode locations must strictly increase: {locs}")

    @property
    def modality(self) -> Modality:
        return Modality.UNIMODAL if len(self.modes) == 1 else Modality.BIMODAL

    @property
    def locations(self) -> list[float]:
        return [m.location for m in self.modes]

    def to_dict(self) -> dict:
        return {
            "modality": self.modality.value,
            "modes": [m.to_dict() for m in self.modes],
        }


def _json_float(v: float):
    return v if math.isfinite(v) else ("inf" if v > 0 else "-inf")
