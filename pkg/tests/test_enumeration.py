from __future__ import annotations

import io
import itertools
import os

import pytest

from gamecrit.canon import canonical_form
from gamecrit.claims import packaged_graph6
from gamecrit.enumeration import (EnumerationError, StreamDiagnostics, enumerate_graphs,
                                  read_graph6_stream)
from gamecrit.graph import Graph, complete, is_connected
from gamecrit.graph6 import Graph6Error

DATA = os.path.join(os.path.dirname(__file__), "data")


def _edge_subset_census(n, connected):
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if connected and not is_connected(g):
            continue
        forms.add(canonical_form(g))
    return forms


def test_counts_against_edge_subset_oracle():
    assert len(_edge_subset_census(4, False)) == 11
    assert len(_edge_subset_census(5, True)) == 21
    for n in range(1, 6):
        for connected in (False, True):
            ours = [canonical_form(g) for g in enumerate_graphs(n, connected)]
            assert len(ours) == len(set(ours))
            assert set(ours) == _edge_subset_census(n, connected)


def test_examples():
    assert len(list(enumerate_graphs(4))) == 11
    assert len(list(enumerate_graphs(5, connected_only=True))) == 21
    assert len(list(enumerate_graphs(1))) == 1


@pytest.mark.parametrize("n,fname", [(6, "all6.g6"), (7, "all7.g6")])
def test_matches_external_generator(n, fname):
    external = {canonical_form(g) for g in read_graph6_stream(os.path.join(DATA, fname))}
    ours = [canonical_form(g) for g in enumerate_graphs(n)]
    assert len(ours) == len(set(ours)) == len(external)
    assert set(ours) == external
    connected = {f for f, g in zip(ours, enumerate_graphs(n)) if is_connected(g)}
    assert len(connected) == {6: 112, 7: 853}[n]


def test_deterministic_order():
    a = [canonical_form(g) for g in enumerate_graphs(5)]
    assert a == sorted(a) == [canonical_form(g) for g in enumerate_graphs(5)]


def test_cap():
    with pytest.raises(EnumerationError):
        list(enumerate_graphs(8))
    with pytest.raises(EnumerationError):
        list(enumerate_graphs(0))


def test_packaged_order8_file():
    graphs = list(read_graph6_stream(packaged_graph6("connected8.g6")))
    assert len(graphs) == 11117
    assert all(g.order == 8 and is_connected(g) for g in graphs[:200])


def test_stream():
    assert list(read_graph6_stream(io.StringIO("A_\n"))) == [complete(2)]
    assert list(read_graph6_stream(io.StringIO(""))) == []
    diag = StreamDiagnostics()
    got = list(read_graph6_stream(["A_", "", "bogus!", "Bw"], diagnostics=diag))
    assert got == [complete(2), complete(3)]
    assert [line for line, _ in diag.errors] == [3]
    with pytest.raises(Graph6Error, match="line 2"):
        list(read_graph6_stream(["A_", "A"], strict=True))


def test_stream_from_path(tmp_path):
    p = tmp_path / "x.g6"
    p.write_text("A_\nBw\n")
    assert [g.order for g in read_graph6_stream(str(p))] == [2, 3]
