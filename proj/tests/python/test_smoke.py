"""End-to-end smoke tests for the python module."""

from fractions import Fraction

import pytest

import srrkit


def test_construct_and_hypergraph():
    gen = srrkit.loads(srrkit.construct(4, 2, 2))
    assert gen["n"] == 4 and gen["k"] == 2 and gen["i"] == 2
    assert gen["q"] == 7
    assert len(gen["columns"]) == 4
    assert gen["columns"][0] == [1, 0] and gen["columns"][1] == [0, 1]

    h = srrkit.loads(srrkit.hypergraph(4, 2, 2, emit_incidence=True))
    assert len(h["vertices"]) == 6
    assert len(h["edges"]) == 8
    assert len(h["A"]) == 6 and len(h["A"][0]) == 8
    assert all(sum(row) == 1 for row in h["S"])


def test_matching_numbers():
    assert srrkit.frac(srrkit.matching_number(4, 2, 2)) == 3
    assert srrkit.frac(srrkit.vertex_cover_number(4, 2, 2)) == 3
    assert srrkit.frac(srrkit.matching_number(6, 3, 0)) == 2
    assert srrkit.frac(srrkit.matching_number(6, 3, 3)) == 4


def test_membership():
    inside = srrkit.membership(4, 2, 2, 0, ["3/2", "3/4"])
    assert inside["member"]
    witness = [Fraction(w) for w in inside["witness"]]
    assert sum(witness) == Fraction(9, 4)

    outside = srrkit.membership(4, 2, 2, 0, ["5/2", "1/100"])
    assert not outside["member"]
    assert outside["certificate"]


def test_intercepts_and_polytopes():
    assert srrkit.frac(srrkit.max_demand(4, 2, 2, 0, 1)) == Fraction(5, 2)
    assert srrkit.frac(srrkit.max_demand(2, 2, 2, 0, 1)) == 1
    assert srrkit.frac(srrkit.max_demand(4, 2, 0, 0, 1)) == 2

    p = srrkit.loads(srrkit.closed_form(5, 3, 3))
    assert p["provenance"] == "CornerNMinus1"
    assert len(p["constraints"]) == 7

    assert srrkit.closed_form(3, 3, 3) is None

    vertices = srrkit.region_vertices(4, 2, 2)
    assert [["0/1", "0/1"], ["0/1", "5/2"], ["1/1", "2/1"], ["2/1", "1/1"], ["5/2", "0/1"]] == vertices


def test_allocate_certificate_is_consistent():
    result = srrkit.allocate(6, 3, 3, 0, ["23/10", "4/5", "3/10"])
    assert result["feasible"]
    cert = srrkit.loads(result["certificate"])
    assert cert["method"] == "GreedyPlusSlicing"
    served = {1: Fraction(0), 2: Fraction(0), 3: Fraction(0)}
    for edge in cert["edges"]:
        served[edge["label"]] += Fraction(edge["weight"])
    assert served == {1: Fraction(23, 10), 2: Fraction(4, 5), 3: Fraction(3, 10)}
    assert all(Fraction(load) <= 1 for load in cert["vertex_loads"])

    blocked = srrkit.allocate(4, 2, 2, 0, ["3", "0"])
    assert not blocked["feasible"]


def test_sum_rate_bound_and_svg():
    assert srrkit.frac(srrkit.sum_rate_bound(4, 2, 2, 0, [1, 2])) == 3
    svg = srrkit.region_svg(4, 2, 2)
    assert svg.startswith("<svg") and "5/2" in svg


def test_small_verify_sweep_is_clean_and_deterministic():
    first = srrkit.verify_sweep(k_min=2, k_max=2, n_max=4, random_points=10, stride=53)
    second = srrkit.verify_sweep(k_min=2, k_max=2, n_max=4, random_points=10, stride=53)
    assert first == second
    report = srrkit.loads(first)
    assert report["ok"]
    assert report["violations"] == []


def test_rejects_decimals():
    with pytest.raises(ValueError):
        srrkit.membership(4, 2, 2, 0, ["0.5", "1"])
