import cmath
import math

import pytest
from hypothesis import given, strategies as st

from stablelaws import StableParams
from stablelaws.transforms import (
    atom_weight_numeric,
    cauchy_g,
    f_transform,
    has_atom,
    stieltjes_density,
)
from stablelaws.boolean import u_plus

PI = math.pi


def valid_params():
    fam = st.sampled_from(["boolean", "monotone"])
    return st.builds(
        lambda f, a, r: StableParams(f, a, 0.5 if (f == "monotone" and a == 1.0) else r),
        fam, st.one_of(st.floats(0.05, 2.0), st.just(1.0), st.just(2.0)), st.floats(0.0, 1.0),
    )


def test_examples_from_definitions():
    assert f_transform(StableParams.boolean(1, 0.5), 1j) == pytest.approx(2j)
    assert f_transform(StableParams.monotone(2, 0.3), 1j) == pytest.approx(1j * math.sqrt(2))
    expected = 1j + 1j * cmath.exp(1j * PI / 4)
    assert f_transform(StableParams.boolean(0.5, 1), 1j) == pytest.approx(expected)
    assert cauchy_g(StableParams.boolean(1, 0.5), 1j) == pytest.approx(-0.5j)
    assert cauchy_g(StableParams.monotone(2, 0.5), 1j) == pytest.approx(-1j / math.sqrt(2))


def test_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        f_transform(StableParams.boolean(0.5, 0.5), 1.0)
    with pytest.raises(ValueError):
        stieltjes_density(StableParams.boolean(0.5, 0.5), 0.0, 0.0)


def test_stieltjes_examples():
    assert stieltjes_density(StableParams.boolean(1, 0.5), 0.0, 1e-6) == pytest.approx(1 / PI, abs=1e-6)
    assert stieltjes_density(StableParams.monotone(2, 0.5), 0.0, 1e-6) == pytest.approx(1 / PI, abs=1e-6)
    assert stieltjes_density(StableParams.boolean(0.5, 1), 1.0, 1e-8) == pytest.approx(1 / (2 * PI), abs=1e-6)


def test_atom_examples():
    assert atom_weight_numeric(StableParams.boolean(1.5, 1), -1.0) == pytest.approx(2 / 3, abs=1e-6)
    assert atom_weight_numeric(StableParams.boolean(0.5, 0.5), 0.0) < 1e-3
    u = u_plus(0.0)
    assert atom_weight_numeric(StableParams.boolean(1, 1), -u) == pytest.approx(u / (u + 2 / PI), abs=1e-6)
    assert has_atom(StableParams.boolean(2, 0.5), 1.0)
    assert not has_atom(StableParams.monotone(1.5, 0.5), 0.3)


@given(valid_params(), st.floats(-5, 5), st.floats(1e-3, 5))
def test_maps_upper_half_plane(p, x, y):
    z = complex(x, y)
    assert f_transform(p, z).imag >= y - 1e-12
    assert cauchy_g(p, z).imag <= 1e-12


@pytest.mark.parametrize("p", [
    StableParams.boolean(0.8, 0.3), StableParams.boolean(1.0, 0.8), StableParams.boolean(1.6, 0.2),
    StableParams.monotone(0.8, 0.3), StableParams.monotone(1.0, 0.5), StableParams.monotone(1.6, 0.9),
])
def test_g_decay(p):
    y = 1e6
    assert abs(1j * y * cauchy_g(p, 1j * y) - 1) <= 1e-3


@pytest.mark.parametrize("family,scale", [("boolean", 1.0), ("monotone", 2.0)])
def test_g_decay_rate_small_alpha(family, scale):
    # iy G(iy) - 1 ~ -e^{i theta} (iy)^{-alpha} / c, so the defect shrinks like y^{-alpha}
    p = StableParams(family, 0.5, 0.3)
    for y in (1e8, 1e12):
        defect = abs(1j * y * cauchy_g(p, 1j * y) - 1)
        assert defect * y**0.5 == pytest.approx(scale, rel=1e-2)
