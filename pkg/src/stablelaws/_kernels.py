"""Vectorized closed-form density kernels on the half-line t >= 0.

All kernels accept scalars or arrays and return float arrays. Values at
t = 0 (and at t = 1 for the edge kernel) are the one-sided limits, which
may be ``inf``. The denominators ``w**2 + 2 w cos(theta) + 1`` are always
evaluated as ``(w + cos)**2 + sin**2`` to avoid cancellation near
theta = pi, and rescaled by ``w**2`` for w > 1 to avoid overflow.
"""

from __future__ import annotations

import numpy as np

_PI = np.pi


def _as_array(t):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValueError("kernels are defined for t >= 0 only")
    return t


def _scaled_q(w, cos_t, sin_t):
    """Return (q / w**2 for w > 1 else q, flag) where q = w^2 + 2w cos + 1."""
    big = w > 1.0
    safe_w = np.where(big, w, 1.0)
    q_small = (w + cos_t) ** 2 + sin_t**2
    q_big = (1.0 + cos_t / safe_w) ** 2 + (sin_t / safe_w) ** 2
    return np.where(big, q_big, q_small), big


def b_alpha(t, alpha, theta):
    t = _as_array(t)
    s, c = np.sin(theta), np.cos(theta)
    if s == 0.0:
        return np.zeros_like(t)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        w = t**alpha
        q, big = _scaled_q(w, c, s)
        # small w: t^(a-1) / q ; big w: t^(a-1) / (w^2 q') = 1 / (t w q')
        small_val = np.power(t, alpha - 1.0) / q
        big_val = 1.0 / (t * np.where(big, w, 1.0) * q)
        out = s / _PI * np.where(big, big_val, small_val)
    zero = t == 0.0
    if np.any(zero):
        out = np.where(zero, np.inf if alpha < 1.0 else 0.0, out)
    return out


def b_alpha_dt(t, alpha, theta):
    """d/dt of :func:`b_alpha`, for t > 0."""
    t = np.asarray(t, dtype=float)
    s, c = np.sin(theta), np.cos(theta)
    w = t**alpha
    f = (1.0 + alpha) * (w + c / (1.0 + alpha)) ** 2 + (s**2 - alpha**2) / (1.0 + alpha)
    q = (w + c) ** 2 + s**2
    return -np.power(t, alpha - 2.0) * s / _PI * f / q**2


def _b1_shift(rho):
    return 2.0 * (2.0 * rho - 1.0) / _PI


def b_one(t, rho):
    t = _as_array(t)
    c = _b1_shift(rho)
    if rho == 0.0:
        return np.zeros_like(t)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_t = np.log(t)
        h = t - c * log_t if c != 0.0 else t
        out = (2.0 * rho / _PI) / (h**2 + 4.0 * rho**2)
    zero = t == 0.0
    if np.any(zero):
        out = np.where(zero, (1.0 / _PI) if c == 0.0 else 0.0, out)
    return out


def b_one_dt(t, rho):
    t = np.asarray(t, dtype=float)
    c = _b1_shift(rho)
    h = t - c * np.log(t)
    return -4.0 * rho * (t - c) * h / (_PI * t * (h**2 + 4.0 * rho**2) ** 2)


def phi(x, theta):
    """``arg(x + e^{i theta})`` for x > 0 and theta in (0, pi), piecewise."""
    x = np.asarray(x, dtype=float)
    if not (0.0 < theta < _PI):
        raise ValueError(f"theta must lie in (0, pi), got {theta}")
    s, c = np.sin(theta), np.cos(theta)
    d = x + c
    with np.errstate(divide="ignore"):
        base = np.arctan(s / d)
    return np.where(d > 0, base, np.where(d == 0, _PI / 2, base + _PI))


def m_alpha(t, alpha, theta):
    t = _as_array(t)
    s, c = np.sin(theta), np.cos(theta)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        w = t**alpha
        angle = phi(w, theta)
        q, big = _scaled_q(w, c, s)
        # q^(1/(2a)) = w^(1/a) q'^(1/(2a)) = t q'^(1/(2a)) when w > 1
        root = np.where(big, t, 1.0) * q ** (1.0 / (2.0 * alpha))
        out = np.sin(angle / alpha) / (_PI * root)
    return out


def m_alpha_dt(t, alpha, theta):
    t = np.asarray(t, dtype=float)
    s, c = np.sin(theta), np.cos(theta)
    w = t**alpha
    q = (w + c) ** 2 + s**2
    return (
        -np.power(t, alpha - 1.0)
        / (_PI * q ** ((alpha + 1.0) / (2.0 * alpha)))
        * np.sin((alpha + 1.0) / alpha * phi(w, theta))
    )


def monotone_edge(t, alpha):
    """``sin(pi/a) / (pi (1 - t^a)^(1/a))`` on [0, 1); inf at t = 1."""
    t = _as_array(t)
    with np.errstate(divide="ignore", invalid="ignore"):
        gap = -np.expm1(alpha * np.log(t))
        out = np.sin(_PI / alpha) / (_PI * gap ** (1.0 / alpha))
    out = np.where(t == 0.0, np.sin(_PI / alpha) / _PI, out)
    out = np.where(t >= 1.0, np.where(t == 1.0, np.inf, 0.0), out)
    return out


def monotone_edge_gap(d, alpha):
    """:func:`monotone_edge` at ``t = 1 - d``, accurate for tiny d."""
    d = np.asarray(d, dtype=float)
    with np.errstate(divide="ignore", over="ignore"):
        gap = -np.expm1(alpha * np.log1p(-d))
        return np.sin(_PI / alpha) / (_PI * gap ** (1.0 / alpha))


def arcsine_gap(d):
    """Arcsine density at distance d inside either edge."""
    d = np.asarray(d, dtype=float)
    with np.errstate(divide="ignore"):
        return 1.0 / (_PI * np.sqrt(d * (2.0 - d)))


def cauchy(x):
    x = np.asarray(x, dtype=float)
    return 1.0 / (_PI * (1.0 + x * x))


def arcsine(x):
    x = np.asarray(x, dtype=float)
    inside = np.abs(x) < 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        val = 1.0 / (_PI * np.sqrt((1.0 - x) * (1.0 + x)))
    val = np.where(inside, val, np.where(np.abs(x) == 1.0, np.inf, 0.0))
    return val
