"""Branch-aware complex powers and logarithms.

Two branches are needed. The principal branch lives on C minus (-inf, 0]
with arg in (-pi, pi); the (0, 2pi) branch lives on C minus [0, inf) with
arg in (0, 2pi). Points on a cut raise :class:`BranchCutError`; the real-axis
values seen from the upper half-plane are available only through the
explicit ``boundary_*`` functions.
"""

from __future__ import annotations

import cmath
import math


class BranchCutError(ValueError):
    """Raised when a point lies on the cut of the requested branch."""


def _check_finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex point {z!r}")
    return z


def principal_arg(z: complex) -> float:
    z = _check_finite(z)
    if z.imag == 0.0 and z.real <= 0.0:
        raise BranchCutError(f"{z!r} lies on the principal cut (-inf, 0]")
    return math.atan2(z.imag, z.real)


def arg_0_2pi(z: complex) -> float:
    """Argument in (0, 2pi), continuous off the cut [0, inf)."""
    z = _check_finite(z)
    if z.imag == 0.0 and z.real >= 0.0:
        raise BranchCutError(f"{z!r} lies on the cut [0, inf)")
    a = math.atan2(z.imag, z.real)
    return a if a > 0.0 else a + 2.0 * math.pi


def _polar(modulus_log: float, angle: float, p: float) -> complex:
    return cmath.exp(complex(p * modulus_log, p * angle))


def principal_pow(z: complex, p: float) -> complex:
    """Principal power ``z**p``.

    ``z = 0`` is allowed only for ``p > 0`` (result 0).
    """
    z = _check_finite(z)
    if z == 0:
        if p > 0:
            return 0j
        raise BranchCutError("0 ** p is undefined for p <= 0")
    return _polar(math.log(abs(z)), principal_arg(z), p)


def pow_0_2pi(z: complex, p: float) -> complex:
    """Power ``z**p`` on the branch with arg in (0, 2pi)."""
    z = _check_finite(z)
    return _polar(math.log(abs(z)), arg_0_2pi(z), p)


def boundary_pow_from_above(x: float, p: float) -> complex:
    """Limit of ``principal_pow(x + iy, p)`` as y decreases to 0."""
    x = float(x)
    if x > 0:
        return complex(x**p, 0.0)
    if x == 0:
        if p > 0:
            return 0j
        raise BranchCutError("boundary power at 0 is undefined for p <= 0")
    return _polar(math.log(-x), math.pi, p)


def principal_log(z: complex) -> complex:
    z = _check_finite(z)
    if z == 0:
        raise BranchCutError("log(0) is undefined")
    return complex(math.log(abs(z)), principal_arg(z))


def boundary_log_from_above(x: float) -> complex:
    """``log(x + i0)``: ``log|x| + i*pi`` for negative x."""
    x = float(x)
    if x == 0:
        raise BranchCutError("log(0) is undefined")
    if x > 0:
        return complex(math.log(x), 0.0)
    return complex(math.log(-x), math.pi)
