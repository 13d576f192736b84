import cmath
import math

import pytest
from hypothesis import given, strategies as st

from stablelaws.branches import (
    BranchCutError,
    arg_0_2pi,
    boundary_log_from_above,
    boundary_pow_from_above,
    principal_arg,
    principal_log,
    principal_pow,
    pow_0_2pi,
)

upper = st.builds(
    complex,
    st.floats(-50, 50, allow_nan=False),
    st.floats(1e-6, 50, allow_nan=False),
)


def test_principal_arg_range():
    assert principal_arg(1j) == pytest.approx(math.pi / 2)
    assert principal_arg(-1 + 1e-300j) == pytest.approx(math.pi)


def test_principal_cut_raises():
    with pytest.raises(BranchCutError):
        principal_arg(-2.0)
    with pytest.raises(BranchCutError):
        principal_log(0)


def test_zero_two_pi_cut_raises():
    with pytest.raises(BranchCutError):
        arg_0_2pi(3.0)
    assert arg_0_2pi(-1 - 1e-12j) == pytest.approx(math.pi, abs=1e-9)
    assert arg_0_2pi(-1j) == pytest.approx(1.5 * math.pi)


def test_sqrt_of_minus_two_on_upper_branch():
    # (-2)^(1/2) on the (0, 2pi) branch is i sqrt 2
    assert pow_0_2pi(-2.0, 0.5) == pytest.approx(1j * math.sqrt(2.0))


def test_zero_power():
    assert principal_pow(0, 0.5) == 0
    with pytest.raises(BranchCutError):
        principal_pow(0, -0.5)


def test_boundary_values():
    assert boundary_pow_from_above(-4.0, 0.5) == pytest.approx(2j)
    assert boundary_log_from_above(-1.0) == pytest.approx(1j * math.pi)
    assert boundary_pow_from_above(4.0, 0.5) == 2.0


def test_nonfinite_rejected():
    with pytest.raises(ValueError):
        principal_arg(complex(math.inf, 1.0))


@given(upper, st.floats(0.05, 2.0))
def test_principal_pow_matches_cmath_on_upper_half_plane(z, p):
    assert principal_pow(z, p) == pytest.approx(cmath.exp(p * cmath.log(z)), rel=1e-12, abs=1e-300)


@given(upper, st.floats(0.05, 2.0))
def test_branches_agree_on_upper_half_plane(z, p):
    # both args lie in (0, pi) there
    assert pow_0_2pi(z, p) == pytest.approx(principal_pow(z, p), rel=1e-12)


@given(st.floats(-10, -1e-3), st.floats(0.1, 1.9))
def test_boundary_pow_is_limit_from_above(x, p):
    approx = principal_pow(complex(x, 1e-13), p)
    assert boundary_pow_from_above(x, p) == pytest.approx(approx, rel=1e-9)
