import pytest

from stablelaws import StableParams, _fault
from stablelaws.structures import Kernel
from stablelaws import verify


def test_tolerance_env(monkeypatch):
    monkeypatch.delenv(verify.TOL_ENV, raising=False)
    assert verify.tolerance() == 1e-6
    monkeypatch.setenv(verify.TOL_ENV, "1e-3")
    assert verify.tolerance() == 1e-3
    for bad in ("abc", "0", "-1"):
        monkeypatch.setenv(verify.TOL_ENV, bad)
        with pytest.raises(ValueError):
            verify.tolerance()


def test_proposition_cells_cover_both_families():
    fams = {p.family.value for p in verify.cells()}
    assert fams == {"boolean", "monotone"}


def test_result_line():
    r = verify.CheckResult("modes", "x", False, "why")
    assert r.line() == "FAIL modes: x (why)"


@pytest.mark.parametrize("suite", verify.SUITES)
def test_each_suite_passes(suite):
    results = verify.run_suite(suite)
    assert results and all(r.passed for r in results), [r.line() for r in results if not r.passed]


def test_fault_is_detected():
    p = StableParams.boolean(0.5, 0.3)
    with _fault.scaled_densities(1.01):
        assert not verify.check_normalization(p).passed
        assert not all(r.passed for r in verify.check_stieltjes(p))


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suite("nope")


def test_derivative_error_is_small_in_cauchy_like_regimes():
    err = verify.derivative_error(Kernel.B_ONE, 1.0, 0.3, [0.1, 1.0, 10.0])
    assert err.max() <= 1e-5
