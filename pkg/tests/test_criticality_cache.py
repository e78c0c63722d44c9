from __future__ import annotations

import json

import pytest

from gamecrit import graph as gr
from gamecrit.cache import ResultCache
from gamecrit.canon import canonical_form
from gamecrit.criticality import (CriticalClass, Flavor, InvariantId, MemoryCache, classify,
                                  delta_profile, invariant_value, is_k_critical)
from gamecrit.enumeration import enumerate_graphs
from gamecrit.table import BudgetExceeded


def test_classify():
    assert classify([1, 1], 2) is CriticalClass.LOWER
    assert classify([-1, -2], 2) is CriticalClass.UPPER
    assert classify([1, -1], 2) is CriticalClass.MIXED
    assert classify([1, 0], 2) is CriticalClass.NOT_CRITICAL
    assert classify([1], 1) is CriticalClass.NOT_CRITICAL


def test_profile_examples():
    p = delta_profile(gr.complete(2), "chi_g")
    assert p.base_value == 2 and p.deltas == [1, 1] and p.critical_class is CriticalClass.LOWER
    p = delta_profile(gr.cycle(5), InvariantId.CHI_I)
    assert p.base_value == 3 and set(p.deltas) == {1} and p.critical_class is CriticalClass.LOWER
    p = delta_profile(gr.path(5), "chi_g")
    assert p.base_value == 3 and p.per_vertex[0].value == 3
    assert p.critical_class is CriticalClass.NOT_CRITICAL
    p = delta_profile(gr.cone(gr.complete_bipartite_minus_matching(4)), "chi_g")
    assert p.base_value == 3 and set(p.deltas) == {-1} and p.critical_class is CriticalClass.UPPER


def test_profile_labels_and_dict():
    p = delta_profile(gr.fig1_graph(), "chi_i")
    row = p.per_vertex[8]
    assert row.label == "x" and row.value == 4 and row.delta == -1
    d = p.to_dict()
    assert d["k"] == 3 and d["per_vertex"][8]["label"] == "x"
    json.dumps(d)


def test_orbits_do_not_change_profiles():
    for g in list(enumerate_graphs(6))[::5]:
        for inv in InvariantId:
            assert delta_profile(g, inv) == delta_profile(g, inv, use_orbits=False)


def test_is_k_critical():
    assert is_k_critical(gr.cycle(3), "chi_g", 3, Flavor.LOWER)
    assert is_k_critical(gr.complete_bipartite_minus_matching(3), "chi_ig_a", 3, "Lower")
    assert not is_k_critical(gr.complete(1), "chi_g", 1, "Any")
    assert not is_k_critical(gr.cycle(3), "chi_g", 3, Flavor.UPPER)
    assert not is_k_critical(gr.cycle(3), "chi_g", 4, Flavor.LOWER)
    cone = gr.cone(gr.complete_bipartite_minus_matching(4))
    assert is_k_critical(cone, "chi_g", 3, Flavor.UPPER)
    assert not is_k_critical(cone, "chi_g", 3, Flavor.MIXED)
    assert is_k_critical(gr.fig1_graph(), "chi_i", 3, "Any") is False  # some deletion keeps chi_i = 3


def test_is_k_critical_agrees_with_profile():
    for g in enumerate_graphs(5):
        for inv in InvariantId:
            prof = delta_profile(g, inv)
            for flavor, cls in [(Flavor.LOWER, CriticalClass.LOWER), (Flavor.UPPER, CriticalClass.UPPER),
                                (Flavor.MIXED, CriticalClass.MIXED)]:
                assert is_k_critical(g, inv, prof.base_value, flavor) == (prof.critical_class is cls)
            any_crit = prof.critical_class is not CriticalClass.NOT_CRITICAL
            assert is_k_critical(g, inv, prof.base_value, Flavor.ANY) == any_crit


def test_empty_graph_convention():
    for inv in InvariantId:
        assert invariant_value(gr.empty_graph(0), inv) == 0
        assert delta_profile(gr.complete(1), inv).per_vertex[0].value == 0


def test_budget_propagates():
    with pytest.raises(BudgetExceeded):
        delta_profile(gr.complete_bipartite_minus_matching(4), "chi_g", budget=3)


def test_memory_cache_used():
    cache = MemoryCache()
    assert invariant_value(gr.cycle(5), "chi_i", cache=cache) == 3
    assert len(cache) == 1
    cache.put((canonical_form(gr.cycle(5)), "chi_i"), 99)
    assert invariant_value(gr.cycle(5), "chi_i", cache=cache) == 99


def test_result_cache_roundtrip(tmp_path):
    path = str(tmp_path / "c.jsonl")
    c = ResultCache(path)
    v = invariant_value(gr.path(4), "chi_g", cache=c)
    c2 = ResultCache(path)
    assert len(c2) == 1 and c2.get((canonical_form(gr.path(4)), "chi_g")) == v == 3


def test_result_cache_ignores_corruption(tmp_path):
    path = tmp_path / "c.jsonl"
    key = canonical_form(gr.path(4)).decode()
    other = canonical_form(gr.cycle(4)).decode()
    path.write_text("\n".join([
        "not json",
        json.dumps({"form": key, "invariant": "chi_g"}),
        json.dumps({"form": key, "invariant": "chi_g", "value": -1}),
        json.dumps({"form": other, "invariant": "chi_g", "value": 3}),
        json.dumps({"form": other, "invariant": "chi_g", "value": 7}),
        "",
    ]))
    c = ResultCache(str(path))
    assert c.ignored == 4 and len(c) == 0
    assert invariant_value(gr.cycle(4), "chi_g", cache=c) == 3
    assert ResultCache(str(path)).get((other.encode(), "chi_g")) is None  # conflict persists in file


def test_cached_and_uncached_agree(tmp_path):
    c = ResultCache(str(tmp_path / "c.jsonl"))
    for g in list(enumerate_graphs(5))[::3]:
        for inv in InvariantId:
            assert delta_profile(g, inv, cache=c) == delta_profile(g, inv)
    warm = ResultCache(str(tmp_path / "c.jsonl"))
    for g in list(enumerate_graphs(5))[::3]:
        assert delta_profile(g, "chi_g", cache=warm) == delta_profile(g, "chi_g")
