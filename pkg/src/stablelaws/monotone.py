"""Monotone (strictly) stable laws: closed-form densities and modes."""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .params import Family, StableParams, golden_cutoff, theta_of
from .structures import (
    Decomposition,
    DensityPiece,
    Kernel,
    Mode,
    ModeKind,
    ModeReport,
    Orientation,
)

PI = math.pi
INF = math.inf


def _positive(x):
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("requires x > 0")
    return x


def phi(x, theta: float):
    """``arg(x + e^{i theta})`` via the three-branch arctan formula."""
    return _kernels.phi(_positive(x), theta)


def radial(x, theta: float):
    """``r(x, theta) = sqrt(x^2 + 2 x cos(theta) + 1)``."""
    x = np.asarray(x, dtype=float)
    return np.sqrt((x + math.cos(theta)) ** 2 + math.sin(theta) ** 2)


def m_kernel(x, alpha: float, theta: float):
    """``sin(phi(x^a, theta)/a) / (pi r(x^a, theta)^(1/a))``."""
    if not (0.0 < alpha <= 2.0) or alpha == 1.0:
        raise ValueError(f"M_alpha needs alpha in (0,1) or (1,2], got {alpha}")
    if not (0.0 < theta < PI):
        raise ValueError(f"M_alpha needs theta in (0, pi), got {theta}")
    return _kernels.m_alpha(_positive(x), alpha, theta)


def m_kernel_derivative(x, alpha: float, theta: float):
    return _kernels.m_alpha_dt(_positive(x), alpha, theta)


def edge_density(x, alpha: float):
    """The rho = 1, alpha in (1, 2) density on (-1, 0]."""
    x = np.asarray(x, dtype=float)
    inside = (x > -1.0) & (x <= 0.0)
    vals = _kernels.monotone_edge(np.where(inside, -x, 0.0), alpha)
    return np.where(inside, vals, np.where(x == -1.0, np.inf, 0.0))


def _check(params: StableParams):
    if params.family is not Family.MONOTONE:
        raise ValueError(f"expected a monotone law, got {params}")


def monotone_decomposition(params: StableParams) -> Decomposition:
    _check(params)
    a, r = params.alpha, params.rho
    R = Orientation.REFLECTED
    if a == 1.0:
        return Decomposition((DensityPiece(Kernel.CAUCHY, (-INF, INF), a),))
    if a == 2.0:
        return Decomposition((DensityPiece(Kernel.ARCSINE, (-1.0, 1.0), a),))
    pos, neg = (0.0, INF), (-INF, 0.0)
    if a < 1.0:
        pieces = []
        if r < 1.0:
            pieces.append(DensityPiece(Kernel.MONOTONE_M, neg, a, (1.0 - r) * a * PI, R))
        if r > 0.0:
            pieces.append(DensityPiece(Kernel.MONOTONE_M, pos, a, theta_of(params)))
        return Decomposition(tuple(pieces))
    edge_theta = (a - 1.0) * PI
    if r == 1.0:
        return Decomposition((
            DensityPiece(Kernel.MONOTONE_EDGE, (-1.0, 0.0), a, edge_theta, R),
            DensityPiece(Kernel.MONOTONE_M, pos, a, edge_theta),
        ))
    if r == 0.0:
        return Decomposition((
            DensityPiece(Kernel.MONOTONE_M, neg, a, edge_theta, R),
            DensityPiece(Kernel.MONOTONE_EDGE, (0.0, 1.0), a, edge_theta),
        ))
    theta_neg = ((1.0 - r) * a + 2.0 * r - 1.0) * PI
    return Decomposition((
        DensityPiece(Kernel.MONOTONE_M, neg, a, theta_neg, R),
        DensityPiece(Kernel.MONOTONE_M, pos, a, theta_of(params)),
    ))


# band ends are compared with this slack so that rho -> theta rounding at a
# boundary angle cannot flip the modality
BAND_EPS = 1e-12


def v_plus(alpha: float, theta: float) -> float:
    beta = alpha * PI / (1.0 + alpha)
    # at theta = beta the sine is zero up to rounding
    return (max(math.sin(theta - beta), 0.0) / math.sin(beta)) ** (1.0 / alpha)


def v_minus(alpha: float, theta: float) -> float:
    beta = alpha * PI / (1.0 + alpha)
    s = max(math.sin(alpha * alpha * PI / (1.0 + alpha) - theta), 0.0)
    return -((s / math.sin(beta)) ** (1.0 / alpha))


def monotone_modes(params: StableParams) -> ModeReport:
    _check(params)
    a, r = params.alpha, params.rho
    C, D = ModeKind.CONTINUOUS, ModeKind.DIVERGENT
    if a == 1.0:
        return ModeReport((Mode(0.0, C),))
    theta = theta_of(params)
    low = a * a * PI / (1.0 + a)
    high = a * PI / (1.0 + a)
    if a < 1.0:
        if theta <= low + BAND_EPS:
            return ModeReport((Mode(v_minus(a, theta), C),))
        if theta >= high - BAND_EPS:
            return ModeReport((Mode(v_plus(a, theta), C),))
        return ModeReport((Mode(0.0, C),))

    # edges at -1 (rho = 1) and +1 (rho = 0) carry divergent peaks
    left = Mode(-1.0, D) if r == 1.0 or a == 2.0 else Mode(v_minus(a, theta), C)
    right = Mode(1.0, D) if r == 0.0 or a == 2.0 else Mode(v_plus(a, theta), C)
    if a <= golden_cutoff():
        # at a = golden ratio the band ends touch the rho = 0, 1 angles
        if r == 1.0:
            return ModeReport((left,))
        if r == 0.0:
            return ModeReport((right,))
        if theta <= high + BAND_EPS:
            return ModeReport((left,))
        if theta >= low - BAND_EPS:
            return ModeReport((right,))
    return ModeReport((left, right))
