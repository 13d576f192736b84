"""Reciprocal Cauchy transforms on the upper half-plane and Stieltjes
inversion; the independent route to densities and atoms."""

from __future__ import annotations

import cmath
import math

from .branches import principal_log, principal_pow, pow_0_2pi
from .params import Family, StableParams, theta_of

PI = math.pi
ATOM_THRESHOLD = 1e-3
ATOM_LADDER = (1e-4, 1e-5, 1e-6)


def _upper(z) -> complex:
    z = complex(z)
    if not z.imag > 0:
        raise ValueError(f"transforms are evaluated on the upper half-plane, got {z}")
    return z


def f_transform(params: StableParams, z) -> complex:
    """Reciprocal Cauchy transform ``F(z)`` for Im z > 0."""
    z = _upper(z)
    a, r = params.alpha, params.rho
    if params.family is Family.BOOLEAN:
        if a == 1.0:
            return z + 2j * r - (2.0 * (2.0 * r - 1.0) / PI) * principal_log(z)
        return z + cmath.exp(1j * theta_of(params)) * principal_pow(z, 1.0 - a)
    if a == 1.0:
        return z + 1j
    w = principal_pow(z, a) + cmath.exp(1j * theta_of(params))
    if a < 1.0:
        return principal_pow(w, 1.0 / a)
    return pow_0_2pi(w, 1.0 / a)


def cauchy_g(params: StableParams, z) -> complex:
    F = f_transform(params, z)
    if F == 0:
        raise ZeroDivisionError(f"F vanished at {z}")
    return 1.0 / F


def stieltjes_density(params: StableParams, x: float, y: float) -> float:
    """``-Im G(x + iy) / pi``; tends to the density as y -> 0."""
    if not y > 0:
        raise ValueError("y must be positive")
    return -cauchy_g(params, complex(x, y)).imag / PI


def _aitken(seq: list[complex]) -> complex:
    s0, s1, s2 = seq
    denom = (s2 - s1) - (s1 - s0)
    if abs(denom) <= 1e-14 * max(abs(s2), 1e-300):
        return s2
    return s2 - (s2 - s1) ** 2 / denom


def atom_weight_numeric(params: StableParams, a: float, ladder=ATOM_LADDER) -> float:
    """Mass at ``a`` from the limit of ``iy G(a + iy)`` as y -> 0.

    The values on a geometric y-ladder are combined by Aitken's delta-squared
    extrapolation, which is exact for corrections of the form ``c y**s``.
    """
    seq = [1j * y * cauchy_g(params, complex(a, y)) for y in ladder]
    return abs(_aitken(seq))


def has_atom(params: StableParams, a: float) -> bool:
    return atom_weight_numeric(params, a) > ATOM_THRESHOLD
