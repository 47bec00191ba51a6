import math
import os
from pathlib import Path

import pytest

import atiyah4

CERTS = Path(os.environ.get("ATIYAH4_CERT_DIR", Path(__file__).resolve().parents[2] / "certificates"))


def test_exact_evaluation():
    assert atiyah4.evaluate("d4", [9, 8, 1, 1, 7, 8]) == "258048"
    assert atiyah4.evaluate("z4", [1] * 6) == "2"
    assert atiyah4.evaluate("p4", ["1/2", 1, 1, 1, 1, 3]) == "3/2"
    with pytest.raises(ValueError):
        atiyah4.evaluate("q4", [1] * 6)
    with pytest.raises(ValueError):
        atiyah4.evaluate("d4", [1, 2])


def test_names_and_symmetry():
    names = atiyah4.polynomial_names()
    assert "F4" in names and "v4sq" in names
    assert atiyah4.is_skew_symmetric("w4")
    assert atiyah4.is_symmetric("d4")
    assert atiyah4.check_perm_group()["ok"]
    assert atiyah4.polynomial_text("p4") == "1 * a^1 b^1 c^1 x^1 y^1 z^1\n"


def test_certificates():
    for name in ("sec3.cert", "eq42.cert", "eq53.cert"):
        r = atiyah4.check_certificate(str(CERTS / name))
        assert r["pass"] and r["residual_terms"] == 0
    assert atiyah4.check_eq52()["pass"]
    assert atiyah4.check_special_vectors()["d4_eq_64p4"] == 21
    with pytest.raises(ValueError):
        atiyah4.check_certificate(str(CERTS / "missing.cert"))


def test_small_lp():
    r = atiyah4.solve_lp("none", ["z4", "n4"])
    assert r["status"] == "infeasible"
    assert r["alpha"] is None
    with pytest.raises(ValueError):
        atiyah4.solve_lp("t9", [])


def test_determinant():
    s = 1 / (2 * math.sqrt(2))
    tet = [(s, s, s), (s, -s, -s), (-s, s, -s), (-s, -s, s)]
    at = atiyah4.atiyah_det(tet)
    assert abs(at - 100) < 1e-9
    assert abs(atiyah4.atiyah_det(tet, [0.3, 1.1, 2.0, -0.4, 0.9, 5.0]) - at) < 1e-12
    u = atiyah4.distance_vector(tet)
    assert all(abs(d - 1) < 1e-15 for d in u)
    assert abs(atiyah4.cayley_menger(u) - 4) < 1e-12
    pts = atiyah4.sample_config(4, 7)
    assert pts == atiyah4.sample_config(4, 7)
    u = atiyah4.distance_vector(pts)
    assert abs(atiyah4.atiyah_det(pts).real - atiyah4.evaluate_float("d4", u)) < 1e-10 * abs(atiyah4.atiyah_det(pts))


def test_cli_and_verify():
    code, out, _ = atiyah4.run_cli(["eval", "v4", "0", "6", "0", "6", "6", "0"])
    assert code == 0 and "v4: 0 " in out
    code, _, _ = atiyah4.run_cli(["eval", "nope", "1", "1", "1", "1", "1", "1"])
    assert code == 2
    rep = atiyah4.verify("sec3", str(CERTS))
    assert rep["exit_code"] == 0
    assert rep["checks"][0]["name"] == "sec3"
