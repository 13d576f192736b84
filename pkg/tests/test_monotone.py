import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from stablelaws import DIVERGENT, Kernel, Modality, ModeKind, StableParams, golden_cutoff
from stablelaws.monotone import (
    edge_density,
    m_kernel,
    m_kernel_derivative,
    monotone_decomposition,
    monotone_modes,
    phi,
    radial,
    v_minus,
    v_plus,
)
from stablelaws.params import theta_of

PI = math.pi


def test_phi_values():
    assert phi(1.0, PI / 2) == pytest.approx(PI / 4)
    # x + cos(theta) < 0 needs the pi-shifted branch
    assert phi(0.1, 0.9 * PI) == pytest.approx(np.angle(0.1 + np.exp(0.9j * PI)))


@given(st.floats(0.05, 3.0), st.floats(0.01, 3.1))
def test_phi_matches_complex_arg(x, theta):
    assert phi(x, theta) == pytest.approx(np.angle(x + np.exp(1j * theta)), abs=1e-12)


def test_phi_decreasing_in_range():
    x = np.geomspace(1e-4, 1e4, 400)
    v = phi(x, 2.0)
    assert np.all(np.diff(v) < 0) and np.all((v > 0) & (v < 2.0))


def test_radial():
    assert radial(1.0, PI / 2) == pytest.approx(math.sqrt(2))


def test_m_kernel_domain():
    with pytest.raises(ValueError):
        m_kernel(1.0, 1.0, 0.5)
    with pytest.raises(ValueError):
        m_kernel(1.0, 0.5, PI)


def test_alpha_one_is_cauchy():
    d = monotone_decomposition(StableParams.monotone(1.0, 0.5))
    x = np.linspace(-9, 9, 37)
    assert np.allclose(d.pdf_values(x), 1 / (PI * (1 + x**2)), rtol=1e-14)


def test_alpha_two_is_arcsine():
    d = monotone_decomposition(StableParams.monotone(2.0, 0.7))
    assert d.pdf(0.0) == pytest.approx(1 / PI)
    assert d.pdf(1.0) is DIVERGENT and d.pdf(1.5) == 0.0


def test_edge_piece_for_rho_one():
    d = monotone_decomposition(StableParams.monotone(1.5, 1.0))
    kinds = [p.kernel for p in d.pieces]
    assert kinds == [Kernel.MONOTONE_EDGE, Kernel.MONOTONE_M]
    assert d.pdf(-1.0) is DIVERGENT
    assert d.pdf(-1 + 1e-6) > d.pdf(-1 + 1e-3)
    assert d.pdf(-1.2) == 0.0


def test_edge_matches_positive_side_at_zero():
    a = 1.5
    d = monotone_decomposition(StableParams.monotone(a, 1.0))
    left, right = d.pieces
    v = math.sin(PI / a) / PI
    assert left.pdf_values(0.0) == pytest.approx(v)
    assert right.pdf_values(1e-15) == pytest.approx(v, rel=1e-9)
    assert edge_density(-0.5, a) == pytest.approx(left.pdf_values(-0.5))


def test_modes_alpha_two_divergent_edges():
    r = monotone_modes(StableParams.monotone(2.0, 0.5))
    assert r.locations == [-1.0, 1.0] and all(m.kind is ModeKind.DIVERGENT for m in r.modes)


def test_modes_golden_cutoff_edges():
    g = golden_cutoff()
    assert monotone_modes(StableParams.monotone(g, 1.0)).modality is Modality.UNIMODAL
    assert monotone_modes(StableParams.monotone(1.7, 1.0)).modality is Modality.BIMODAL


def test_modes_small_alpha_bands():
    a = 0.5
    low = a * a / (1 + a)   # theta / (alpha pi) at the lower band end
    high = 1 / (1 + a)
    assert monotone_modes(StableParams.monotone(a, low / 2)).locations[0] < 0
    assert monotone_modes(StableParams.monotone(a, (low + high) / 2)).locations == [0.0]
    assert monotone_modes(StableParams.monotone(a, (high + 1) / 2)).locations[0] > 0


def test_band_ends_degenerate_to_zero():
    a = 0.5
    th_low = a * a * PI / (1 + a)
    assert v_minus(a, th_low) == pytest.approx(0.0, abs=1e-12)
    assert v_plus(a, a * PI / (1 + a)) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("alpha,rho", [(0.5, 0.9), (0.5, 0.1), (1.3, 0.3), (1.7, 0.5), (1.9, 0.8)])
def test_v_zeroes_derivative(alpha, rho):
    p = StableParams.monotone(alpha, rho)
    d = monotone_decomposition(p)
    for mode in monotone_modes(p).modes:
        if mode.kind is not ModeKind.CONTINUOUS or mode.location == 0.0:
            continue
        piece = next(q for q in d.pieces if q.support[0] < mode.location < q.support[1])
        assert abs(m_kernel_derivative(abs(mode.location), alpha, piece.angle)) < 1e-8


def test_continuity_at_zero():
    for a, r in ((0.5, 0.4), (1.5, 0.5), (1.8, 0.2)):
        p = StableParams.monotone(a, r)
        d = monotone_decomposition(p)
        x = 1e-12 ** (1 / a)
        target = math.sin(theta_of(p) / a) / PI
        assert d.pdf(x) == pytest.approx(target, abs=1e-8)
        assert d.pdf(-x) == pytest.approx(target, abs=1e-8)
