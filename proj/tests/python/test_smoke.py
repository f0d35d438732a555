import os
from fractions import Fraction

import pytest

import kedge

DATA = os.environ.get("KEDGE_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def test_summarize_octagon():
    pts = kedge.read_points(os.path.join(DATA, "octagon.txt"))
    rep = kedge.summarize(pts)
    assert rep["crossings"] == 70
    assert rep["halving_lines"] == 4
    assert rep["identity_check"]


def test_mixed_coordinate_types():
    rep = kedge.summarize([(0, 0), ("4", 0), (Fraction(1, 2), 3), (2, "7/3")])
    assert rep["n"] == 4
    assert sum(rep["edge_vector"]) == 6


def test_collinear_input_raises():
    with pytest.raises(ValueError):
        kedge.summarize([(0, 0), (1, 1), (2, 2)])
    assert kedge.collinear_triples([(0, 0), (1, 1), (2, 2)]) == [(0, 1, 2)]


def test_bounds():
    assert kedge.halving_upper_bound(27) == 96
    assert kedge.cr_lower_bound(39)["value"] == 29691
    assert kedge.cr_lower_bound(24, "table1")["exact_value"] == Fraction(3699)
    assert len(kedge.section5()) == 72


def test_sr_and_central():
    pts = kedge.build_sr(3)
    assert len(pts) == 27
    assert pts[0][2] == "a_1"
    assert kedge.summarize(pts)["E_leq"][:12] == [kedge.sr_target_leq(3, k) for k in range(12)]
    rep = kedge.verify_central([p[:2] for p in kedge.polygon_center(3, 9)], 3)
    assert rep["holds"] and rep["E_geq_k"] == 15


def test_selftest_bounds():
    results = kedge.selftest("bounds")
    assert [r["id"] for r in results] == [1, 2, 3, 4, 10, 11]
    assert all(r["passed"] for r in results)
