import json

import pytest

import knotconc


def test_corpus():
    assert "trefoil" in knotconc.corpus_names()
    assert "stevedore" in knotconc.seifert_names()
    doc = json.loads(knotconc.example_triple("trefoil"))
    assert doc["kind"] == "triple"
    assert doc["version"] == knotconc.format_version


def test_validate_and_factors():
    ok, items = knotconc.validate_triple(knotconc.example_triple("figure-eight"))
    assert ok
    assert all(item[1] for item in items)
    assert knotconc.alexander_factors(knotconc.example_triple("stevedore")) == ["2*t^2 - 5*t + 2"]


def test_sum_and_inverse():
    t = knotconc.example_triple("trefoil")
    s = knotconc.example_triple("stevedore")
    ts = knotconc.connected_sum(t, s)
    assert knotconc.validate_triple(ts)[0]
    assert len(knotconc.alexander_factors(ts)) == 2
    assert knotconc.ac1(ts)[0] == "not metabolic"
    assert knotconc.ac1(knotconc.connected_sum(t, knotconc.invert(t)))[0] == "metabolic"


def test_blanchfield():
    assert knotconc.blanchfield(knotconc.example_triple("trefoil")) == [["(t)/(t^2 - t + 1)"]]
    assert knotconc.ac1(knotconc.example_seifert("trefoil"))[0] == "not metabolic"
    assert knotconc.ac1(knotconc.seifert_document([[1, 1], [0, -2]]))[0] == "metabolic"


def test_errors():
    with pytest.raises(ValueError, match="byte"):
        knotconc.validate_triple('{"kind": "triple"')
    with pytest.raises(ValueError):
        knotconc.validate_triple(knotconc.example_seifert("trefoil"))
