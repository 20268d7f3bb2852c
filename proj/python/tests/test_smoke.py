import math

import pytest

import bakerforge as bf


def test_schema():
    assert bf.SCHEMA == "baker-forge/1"
    assert bf.DEFAULT_PRECISION == 128


def test_constants_for_integer_points():
    rep = bf.constants(["0", "1", "2"])
    g = rep["g"]
    assert bf.midpoint(g["g2"]) == pytest.approx(3.0)
    assert bf.midpoint(rep["base"]["e0"]) >= 3 * math.sqrt(math.log(2))


def test_z_of_inverts_z_log_z():
    y = 2 * math.e**2
    res = bf.z_of(repr(y))
    assert res["converged"]
    assert bf.midpoint(res["z"]) == pytest.approx(math.e**2, rel=1e-12)


def test_z_of_rejects_small_y():
    with pytest.raises((ValueError, ArithmeticError)):
        bf.z_of("1")


def test_siegel_small_system():
    res = bf.siegel_solve([["3", "5"]])
    assert res["verified"]
    assert res["max_norm"] == "25"


def test_siegel_gaussian():
    res = bf.siegel_solve([["1", "i"]], field="Q(i)")
    assert res["verified"]


def test_pade_build_checks_hold():
    res = bf.pade_build(["0", "1", "2"], [2, 2])
    assert res["checks"]["order"] == "holds"
    assert res["bound_met"]
    assert res["forms"]["integral"] == "holds"
    assert res["raw_bounds"]["all"] == "holds"


def test_a_hat_and_b_hat():
    a = bf.a_hat(["0", "1", "2"])
    b = bf.b_hat(["0", "1", "2"])
    assert a["side_condition"] == "holds"
    assert b["threshold_ok"] == "holds"


def test_example_gaussian_disk():
    res = bf.example("gaussian_disk", r_squared="2")
    assert res["all"] != "fails"
    with pytest.raises(ValueError):
        bf.example("nope")


def test_empirical_check():
    res = bf.check(["0", "1"], box=2)
    assert res["candidates"] == 24
    assert res["violations"] == 0


def test_bad_field():
    with pytest.raises(ValueError):
        bf.constants(["0", "1"], field="D=4")
