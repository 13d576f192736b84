"""Boolean stable laws: closed-form densities, atoms and modes."""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .numerics import bracketed_root
from .params import Family, StableParams, alpha0, theta_of
from .structures import (
    Atom,
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
        raise ValueError("kernel evaluation requires x > 0")
    return x


def b_kernel(x, alpha: float, theta: float):
    """``sin(theta)/pi * x^(a-1) / (x^(2a) + 2 x^a cos(theta) + 1)``."""
    return _kernels.b_alpha(_positive(x), alpha, theta)


def b1_kernel(x, rho: float):
    return _kernels.b_one(_positive(x), rho)


def b_kernel_derivative(x, alpha: float, theta: float):
    return _kernels.b_alpha_dt(_positive(x), alpha, theta)


def b1_kernel_derivative(x, rho: float):
    return _kernels.b_one_dt(_positive(x), rho)


def u_plus(rho: float) -> float:
    """Positive root of ``pi x + 2 (1 - 2 rho) log x = 0`` for rho in [0, 1/2)."""
    if not (0.0 <= rho < 0.5):
        raise ValueError(f"u_plus needs rho in [0, 1/2), got {rho}")
    c = 2.0 * (1.0 - 2.0 * rho)
    f = lambda x: PI * x + c * math.log(x)
    lo = 1e-8
    while f(lo) >= 0.0:
        lo *= 1e-4
    return bracketed_root(f, lo, 10.0, tol=1e-15, fprime=lambda x: PI + c / x)


def u_minus(rho: float) -> float:
    """``-u_plus(1 - rho)`` for rho in (1/2, 1]."""
    if not (0.5 < rho <= 1.0):
        raise ValueError(f"u_minus needs rho in (1/2, 1], got {rho}")
    return -u_plus(1.0 - rho)


def _check(params: StableParams):
    if params.family is not Family.BOOLEAN:
        raise ValueError(f"expected a Boolean law, got {params}")


def b1_atom() -> Atom:
    """The atom of b_{1,1}: at -u_+(0) with weight u/(u + 2/pi)."""
    u = u_plus(0.0)
    return Atom(-u, u / (u + 2.0 / PI))


def boolean_decomposition(params: StableParams) -> Decomposition:
    _check(params)
    a, r = params.alpha, params.rho
    if a == 2.0:
        return Decomposition((), (Atom(-1.0, 0.5), Atom(1.0, 0.5)))

    pos = (0.0, INF)
    neg = (-INF, 0.0)
    R = Orientation.REFLECTED
    if a == 1.0:
        pieces, atoms = [], []
        if r > 0.0:
            pieces.append(DensityPiece(Kernel.B_ONE, pos, a, r))
        if r < 1.0:
            pieces.insert(0, DensityPiece(Kernel.B_ONE, neg, a, 1.0 - r, R))
        if r == 1.0:
            atoms.append(b1_atom())
        elif r == 0.0:
            mirror = b1_atom()
            atoms.append(Atom(-mirror.location, mirror.weight))
        return Decomposition(tuple(pieces), tuple(atoms))

    theta = theta_of(params)
    if a < 1.0:
        theta_neg = (1.0 - r) * a * PI
    else:
        theta_neg = ((1.0 - r) * a + 2.0 * r - 1.0) * PI
    pieces, atoms = [], []
    # rho = 1 (resp. 0) puts the negative (resp. positive) angle at 0 or pi
    if r < 1.0:
        pieces.append(DensityPiece(Kernel.B_ALPHA, neg, a, theta_neg, R))
    if r > 0.0:
        pieces.append(DensityPiece(Kernel.B_ALPHA, pos, a, theta))
    if a > 1.0:
        if r == 1.0:
            atoms.append(Atom(-1.0, 1.0 / a))
        elif r == 0.0:
            atoms.append(Atom(1.0, 1.0 / a))
    return Decomposition(tuple(pieces), tuple(atoms))


# angles this close to an open band end count as outside the band: there the
# critical point is a degenerate inflection, and rho -> theta rounding
# must not decide the modality
BAND_EPS = 1e-12


def x_plus(alpha: float, theta: float) -> float:
    s = math.sin(theta)
    disc = alpha * alpha - s * s
    if disc < -1e-12:
        raise ValueError("x_plus requires sin(theta) <= alpha")
    base = (-math.cos(theta) + math.sqrt(max(disc, 0.0))) / (1.0 + alpha)
    if base < 0.0:
        raise ValueError(f"no positive critical point for alpha={alpha}, theta={theta}")
    return base ** (1.0 / alpha)


def x_minus(alpha: float, theta: float) -> float:
    return -x_plus(alpha, alpha * PI - theta)


def boolean_modes(params: StableParams) -> ModeReport:
    """Modes per the Boolean mode theorem.

    For alpha in (alpha0, 1) the positive local maximum exists for
    theta in (pi - arcsin a, a pi] and the negative one for
    theta in [0, arcsin a - (1 - a) pi); see the decisions on this split.
    """
    _check(params)
    a, r = params.alpha, params.rho
    C, D, A = ModeKind.CONTINUOUS, ModeKind.DIVERGENT, ModeKind.ATOM
    if a < 1.0:
        zero = Mode(0.0, D)
        if a <= alpha0():
            return ModeReport((zero,))
        theta = theta_of(params)
        asin = math.asin(a)
        if PI - asin + BAND_EPS < theta <= a * PI:
            return ModeReport((zero, Mode(x_plus(a, theta), C)))
        if 0.0 <= theta < asin - (1.0 - a) * PI - BAND_EPS:
            return ModeReport((Mode(x_minus(a, theta), C), zero))
        return ModeReport((zero,))
    if a == 1.0:
        if r == 0.5:
            return ModeReport((Mode(0.0, C),))
        if r < 0.5:
            return ModeReport((
                Mode(-2.0 * (1.0 - 2.0 * r) / PI, C),
                Mode(u_plus(r), A if r == 0.0 else C),
            ))
        return ModeReport((
            Mode(u_minus(r), A if r == 1.0 else C),
            Mode(2.0 * (2.0 * r - 1.0) / PI, C),
        ))
    theta = theta_of(params)
    left_atom = r == 1.0 or a == 2.0
    right_atom = r == 0.0 or a == 2.0
    left = Mode(-1.0, A) if left_atom else Mode(x_minus(a, theta), C)
    right = Mode(1.0, A) if right_atom else Mode(x_plus(a, theta), C)
    return ModeReport((left, right))
