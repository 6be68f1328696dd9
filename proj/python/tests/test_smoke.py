import math
import pathlib

import pytest

import sdsearch

DATA = pathlib.Path(__file__).resolve().parents[2] / "data" / "desk"


def test_golay():
    g = sdsearch.golay24()
    assert (g.length, g.dimension) == (24, 12)
    assert g.is_self_dual() and g.is_doubly_even()
    assert g.min_distance() == 8
    assert g.weight_distribution() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    assert g.automorphism_order() == 244823040


def test_code_from_rows():
    c = sdsearch.BinaryCode(["1100", "0011"])
    assert c.is_self_dual()
    assert c.contains("1111")
    assert not c.contains("1000")
    assert c.dual() == c


def test_bad_rows():
    with pytest.raises(sdsearch.InputError):
        sdsearch.BinaryCode.parse("4 1\n1102\n")


def test_classification_mass():
    out = sdsearch.classify_self_dual(8)
    assert out["total"] == sdsearch.self_dual_count(8)
    assert out["mass"] == out["total"]
    assert sum(math.factorial(8) // c["aut_order"] for c in out["classes"]) == out["total"]


def test_isotropic_counts():
    for m in (1, 2, 3):
        assert sdsearch.count_max_isotropic(m) == sdsearch.max_isotropic_count(m)


def test_desk_data_and_orbits():
    codes = sdsearch.read_codes(DATA / "length8")
    assert all(c.is_self_dual() and c.length == 8 for c in codes)
    reps = [r for c in codes for r in sdsearch.orbit_representatives(c, "d8", 2)]
    assert len(reps) == 7
    assert all(r.is_self_dual() for r in reps)
    assert sdsearch.equivalent(sdsearch.hamming8(), codes[1])
    assert not sdsearch.equivalent(sdsearch.hamming8(), codes[0])
