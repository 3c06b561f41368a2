import json
import math
import os

import pytest

import quatdiff as qd


def test_quaternion_algebra():
    i = (0.0, 1.0, 0.0, 0.0)
    j = (0.0, 0.0, 1.0, 0.0)
    assert qd.qmul(i, j) == pytest.approx((0.0, 0.0, 0.0, 1.0))
    q = (0.5, 0.5, 0.5, 0.5)
    assert qd.qmul(q, qd.qinv(q)) == pytest.approx((1.0, 0.0, 0.0, 0.0))
    with pytest.raises(qd.QuatdiffError):
        qd.qinv((2.0, 0.0, 0.0, 0.0))


def test_error_quat_and_velocity_maps():
    p = (1.0, 0.0, 0.0, 0.0)
    q = (math.cos(0.5), 0.0, 0.0, math.sin(0.5))
    e = qd.error_quat(p, q)
    assert e == pytest.approx(q)
    w = (1.0, 0.0, 0.0)
    v = qd.v_from_w(e, w)
    assert qd.w_from_v(e, v) == pytest.approx(w)


def test_closed_form_coefficients():
    d = qd.char_poly_closed(0.5, 1.0)
    assert d["cubic"] == pytest.approx((4.25, 2.0, 0.25))
    assert d["c4"] == pytest.approx(4.25 / 1.5)
    assert qd.discriminant(0.5) == pytest.approx(2.0)
    assert qd.discriminant(-0.5) == pytest.approx(-4.0)


def test_classify_and_eigenvalues():
    rep = qd.classify(0.5)
    assert rep["class"] == "MarginallyStable"
    assert all(abs(l.real) < 1e-10 for l in rep["eigenvalues"])
    assert qd.classify(-0.5)["class"] == "Unstable"
    # eigenvalues scale linearly with |w|
    e1 = qd.eigenvalues(0.5, 1.0)
    e3 = qd.eigenvalues(0.5, 3.0)
    for a, b in zip(e1, e3):
        assert abs(3.0 * a - b) < 1e-10


def test_build_A_matches_numeric_charpoly():
    A = qd.build_A(math.cos(0.5), (0.0, 0.0, math.sin(0.5)), (1.0, 0.0, 0.0))
    coef = qd.char_poly_numeric(A)
    assert coef[0] == pytest.approx(1.0)
    assert coef[1] == pytest.approx(0.0, abs=1e-12)  # traceless


def test_run_scenario():
    path = os.path.join(os.environ["QUATDIFF_SCENARIOS"], "paper_sec5.json")
    with open(path) as f:
        text = f.read()
    trace = qd.run_scenario(text)
    assert trace["t"][0] == 0.0
    assert trace["r_mag"][-1] < 0.01 * trace["r_mag"][0]
    # Lyapunov value is non-increasing up to roundoff
    vl = trace["V_L"]
    assert all(b <= a + 1e-9 for a, b in zip(vl, vl[1:]))


def test_selftest():
    res = qd.selftest(seed=1, n_states=25)
    assert res["all_pass"]
    assert len(res["checks"]) == 5
