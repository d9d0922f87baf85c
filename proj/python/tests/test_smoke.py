import json
from fractions import Fraction
from math import comb, e

import pytest

import vcell


def test_stabilized_tree_series_is_three_coloured_catalan():
    big = vcell.r_series(30, 8)
    assert big == [Fraction(3**n * comb(2 * n, n), n + 1) for n in range(9)]


def test_closed_form_matches_recursion():
    assert vcell.closed_r(2, 10) == vcell.r_series(2, 10)


def test_area_two_stratum():
    f = vcell.f_coefficients(4)
    assert f[(3, 1)] == 2 and f[(2, 2)] == Fraction(3, 2) and f[(1, 3)] == 2


def test_oracle_agrees_with_series():
    assert vcell.oracle_f(3) == vcell.f_coefficients(6)


def test_law_two_edges():
    law = vcell.law(2)
    assert law["normalization"] == Fraction(11, 2)
    assert [w / law["normalization"] for w in law["weights"]] == [0, Fraction(4, 11), Fraction(3, 11), Fraction(4, 11), 0]
    assert sum(law["probabilities"]) == pytest.approx(1.0, abs=1e-12)


def test_float_backend_tracks_exact():
    exact = vcell.law(8)["probabilities"]
    approx = vcell.law(8, backend="float")["probabilities"]
    assert approx == pytest.approx(exact, abs=1e-12)


def test_mgf_gap_shrinks():
    limit = vcell.mgf_limit(1.0)
    assert limit == pytest.approx(e - 1, rel=1e-15)
    assert abs(vcell.mgf(20, 1.0) - limit) < abs(vcell.mgf(10, 1.0) - limit)


def test_bijection_demo_round_trip():
    out = vcell.bijection(vcell.demo_path3())
    assert out["issues"] == []
    assert out["areas"] == (Fraction(1, 2), Fraction(1, 2))
    assert out["identity"] and out["odd"] and out["s"] == 1
    assert json.loads(out["iltfm"])["kind"] == "iltfm"


def test_invalid_map_reports_involution_violation():
    doc = json.loads(vcell.demo_path3())
    doc["alpha"] = [[0, 0], [1, 1], [2, 3]]
    issues = vcell.bijection(json.dumps(doc))["issues"]
    assert any("involution violation" in i for i in issues)


def test_malformed_text_raises():
    with pytest.raises(ValueError):
        vcell.validate_map("{not json")


def test_bad_arguments_raise_value_error():
    with pytest.raises(ValueError):
        vcell.law(3, variant="both")
    with pytest.raises(ValueError):
        vcell.r_fn(0.0, 1.0)


def test_scaling_functions():
    assert vcell.r_fn(60.0, 1.0) == pytest.approx(-1 / 3, abs=1e-15)
    assert vcell.pde_residual(1.0, 1.5, 0.7, 1.3) < 1e-8
    assert vcell.x_fn_equal(0.4, 1.9, 1.1) == vcell.x_fn_equal(1.9, 0.4, 1.1)
    assert vcell.contour_total(1.0) == pytest.approx((e - 1) / (4 * 3.141592653589793**0.5), rel=1e-8)
    assert vcell.bridge_error(2.0, 0.01, 1.0) < 0.05
