import math
import pickle

import numpy as np
import pytest

from stablelaws import (
    DIVERGENT,
    Atom,
    Decomposition,
    DensityPiece,
    Kernel,
    Mode,
    ModeKind,
    ModeReport,
    Orientation,
)
from stablelaws import _fault


def test_divergent_marker():
    assert float(DIVERGENT) == math.inf and str(DIVERGENT) == "inf"
    assert pickle.loads(pickle.dumps(DIVERGENT)) is DIVERGENT


def test_atom_weight_validated():
    with pytest.raises(ValueError):
        Atom(0.0, 0.0)
    with pytest.raises(ValueError):
        Atom(0.0, 1.5)


def test_decomposition_rejects_overlap_and_excess_mass():
    p = DensityPiece(Kernel.CAUCHY, (-math.inf, math.inf), 1.0)
    q = DensityPiece(Kernel.ARCSINE, (-1.0, 1.0), 2.0)
    with pytest.raises(ValueError):
        Decomposition((p, q))
    with pytest.raises(ValueError):
        Decomposition((), (Atom(0.0, 0.7), Atom(1.0, 0.7)))


def test_reflected_piece_evaluates_at_minus_x():
    direct = DensityPiece(Kernel.B_ALPHA, (0.0, math.inf), 0.5, 1.0)
    mirror = DensityPiece(Kernel.B_ALPHA, (-math.inf, 0.0), 0.5, 1.0, Orientation.REFLECTED)
    x = np.array([0.1, 1.0, 7.0])
    assert np.array_equal(direct.pdf_values(x), mirror.pdf_values(-x))
    assert mirror.pdf_values(1.0) == 0.0


def test_fault_hook_scales_and_restores():
    piece = DensityPiece(Kernel.CAUCHY, (-math.inf, math.inf), 1.0)
    base = float(piece.pdf_values(0.3))
    with _fault.scaled_densities(1.01):
        assert float(piece.pdf_values(0.3)) == pytest.approx(1.01 * base)
    assert float(piece.pdf_values(0.3)) == base


def test_mode_report_validation():
    with pytest.raises(ValueError):
        ModeReport(())
    with pytest.raises(ValueError):
        ModeReport((Mode(1.0, ModeKind.ATOM), Mode(0.0, ModeKind.ATOM)))
    r = ModeReport((Mode(-1.0, ModeKind.ATOM), Mode(1.0, ModeKind.ATOM)))
    assert r.to_dict()["modality"] == "Bimodal"


def test_to_dict_serializes_infinite_support():
    piece = DensityPiece(Kernel.B_ONE, (0.0, math.inf), 1.0, 0.5)
    assert piece.to_dict()["support"] == [0.0, "inf"]
