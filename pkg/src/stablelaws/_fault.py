"""Fault-injection hook used to prove the verification suites can fail.

Every closed-form density is multiplied by ``density_scale``; it is 1.0
except inside :func:`scaled_densities`.
"""

from __future__ import annotations

from contextlib import contextmanager

density_scale = 1.0


@contextmanager
def scaled_densities(scale: float = 1.01):
    global density_scale
    previous = density_scale
    density_scale = float(scale)
    try:
        yield
    finally:
        density_scale = previous
