"""Parameter handles, the angle reparametrization and threshold constants."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .numerics import bracketed_root


class Family(str, enum.Enum):
    BOOLEAN = "boolean"
    MONOTONE = "monotone"


@dataclass(frozen=True)
class StableParams:
    """Identifies one Boolean or monotone law by ``(alpha, rho)``.

    Validation happens here and nowhere else; every downstream routine
    assumes a valid instance.
    """

    family: Family
    alpha: float
    rho: float

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "rho", float(self.rho))
        if not (0.0 < self.alpha <= 2.0):
            raise ValueError(f"alpha must lie in (0, 2], got {self.alpha}")
        if not (0.0 <= self.rho <= 1.0):
            raise ValueError(f"rho must lie in [0, 1], got {self.rho}")
        if self.family is Family.MONOTONE and self.alpha == 1.0 and self.rho != 0.5:
            raise ValueError(
                "the monotone law with alpha = 1 is only defined for rho = 1/2"
            )

    @classmethod
    def boolean(cls, alpha: float, rho: float) -> "StableParams":
        return cls(Family.BOOLEAN, alpha, rho)

    @classmethod
    def monotone(cls, alpha: float, rho: float) -> "StableParams":
        return cls(Family.MONOTONE, alpha, rho)

    @property
    def theta(self) -> float | None:
        """The angle ``theta``, or None when alpha = 1."""
        return None if self.alpha == 1.0 else theta_of(self)

    def reflected(self) -> "StableParams":
        return StableParams(self.family, self.alpha, 1.0 - self.rho)

    def __str__(self) -> str:
        return f"{self.family.value}(alpha={self.alpha:g}, rho={self.rho:g})"


def theta_of(params: StableParams) -> float:
    """``rho*alpha*pi`` for alpha < 1, ``((alpha-2)*rho + 1)*pi`` for alpha > 1."""
    a, r = params.alpha, params.rho
    if a == 1.0:
        raise ValueError("theta is not defined for alpha = 1")
    if a < 1.0:
        return r * a * math.pi
    return ((a - 2.0) * r + 1.0) * math.pi


@lru_cache(maxsize=None)
def alpha0() -> float:
    """Root of ``sin(pi*a) = a`` in (0, 1); the Boolean unimodality threshold."""
    return bracketed_root(
        lambda a: math.sin(math.pi * a) - a,
        0.5,
        0.99,
        tol=1e-14,
        fprime=lambda a: math.pi * math.cos(math.pi * a) - 1.0,
    )


def golden_cutoff() -> float:
    return (1.0 + math.sqrt(5.0)) / 2.0
