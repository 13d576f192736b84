"""Boolean and monotone stable distributions: densities, atoms and modes."""

from .params import Family, StableParams, alpha0, golden_cutoff, theta_of
from .structures import (
    DIVERGENT,
    Atom,
    Decomposition,
    DensityPiece,
    Kernel,
    Modality,
    Mode,
    ModeKind,
    ModeReport,
    Orientation,
)

__version__ = "0.1.0"
