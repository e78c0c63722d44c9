from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

import naive
from gamecrit import graph as gr
from gamecrit.enumeration import enumerate_graphs
from gamecrit.graph import GraphError, iter_bits
from gamecrit.independence_game import (IndependenceGameSolver, IndepGameState, Variant, chi_ig_a,
                                        chi_ig_ab, game_value, legal_round_moves)
from test_graph import graphs


def _state(g, finished=0, round_class=0, alice=True, variant=Variant.A):
    return IndepGameState(g, finished, round_class, alice, variant)


def test_legal_round_moves():
    c4 = gr.cycle(4)
    assert legal_round_moves(_state(c4)) == 0b1111
    assert legal_round_moves(_state(gr.complete(2), round_class=0b01)) == 0
    assert legal_round_moves(_state(c4, round_class=0b0001)) == 0b0100
    with pytest.raises(ValueError):
        _state(gr.complete(2), round_class=0b11)


def test_examples():
    for n in (3, 4):
        h = gr.complete_bipartite_minus_matching(n)
        assert chi_ig_a(h) == chi_ig_ab(h) == n
    g = gr.disjoint_union(gr.cycle(6), gr.path(6))
    assert chi_ig_a(g) == chi_ig_ab(g) == 3
    for v in range(12):
        h = gr.delete_vertex(g, v)
        assert chi_ig_a(h) == chi_ig_ab(h) == 2
    assert game_value(gr.complete(1), "A") == 1
    assert game_value(gr.empty_graph(0), "AB") == 0
    assert chi_ig_ab(gr.path(6)) == chi_ig_a(gr.path(6)) == 3
    c4p = gr.c4_plus()
    assert chi_ig_a(c4p) == chi_ig_ab(c4p) == 3
    assert all(chi_ig_a(gr.delete_vertex(c4p, v)) == 2 for v in range(8))
    assert chi_ig_ab(gr.complete_bipartite_minus_matching(3)) == 3
    for n in range(1, 7):
        assert chi_ig_a(gr.complete(n)) == n


def test_forced_move_errors():
    with pytest.raises(GraphError):
        game_value(gr.path(3), "A", first_move=3)


@pytest.mark.parametrize("variant", ["A", "AB"])
@pytest.mark.parametrize("symmetry", [False, True])
def test_oracle_order5(variant, symmetry):
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            assert game_value(g, variant, symmetry=symmetry) == naive.independence_game(g, variant), g
            for u in range(n):
                assert game_value(g, variant, u, symmetry=symmetry) == naive.independence_game(g, variant, u)


def test_bounds_order6():
    for g in enumerate_graphs(6):
        for variant in Variant:
            v = game_value(g, variant)
            assert gr.chromatic_number(g) <= v <= g.order


def _check_rounds(g, rounds):
    uncolored = g.vertex_mask
    for rnd in rounds:
        assert rnd, "every round colours something"
        cls = 0
        for v in rnd:
            assert uncolored >> v & 1 and not g.adj[v] & cls
            cls |= 1 << v
        # maximal among the vertices uncoloured at round start
        for w in iter_bits(uncolored & ~cls):
            assert g.adj[w] & cls
        uncolored &= ~cls
    assert uncolored == 0


@pytest.mark.parametrize("variant", list(Variant))
def test_principal_variation(variant):
    for g in list(enumerate_graphs(6, connected_only=True))[::7] + [gr.c4_plus()]:
        solver = IndependenceGameSolver(g, variant)
        pv = solver.principal_variation()
        _check_rounds(g, pv)
        assert len(pv) == solver.value()


def _random_play(g, variant, rng):
    uncolored, available, alice = g.vertex_mask, g.vertex_mask, True
    rounds, movers = [[]], [[]]
    while uncolored:
        if not available:
            available = uncolored
            rounds.append([])
            movers.append([])
            if variant is Variant.A:
                alice = True
        v = rng.choice(list(iter_bits(available)))
        rounds[-1].append(v)
        movers[-1].append(alice)
        uncolored &= ~(1 << v)
        available &= ~(1 << v) & ~g.adj[v]
        alice = not alice
    return rounds, movers


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=9), st.integers(0, 2**16), st.sampled_from(list(Variant)))
def test_random_trajectories(g, seed, variant):
    rounds, movers = _random_play(g, variant, random.Random(seed))
    if g.order:
        _check_rounds(g, rounds)
    # colours used equal rounds played
    colour = {v: i for i, rnd in enumerate(rounds) for v in rnd}
    assert len(set(colour.values())) == len([r for r in rounds if r])
    for prev, nxt in zip(movers, movers[1:]):
        if variant is Variant.A:
            assert nxt[0] is True
        else:
            assert nxt[0] is (not prev[-1])


def test_rounds_left_consistent():
    g = gr.path(5)
    solver = IndependenceGameSolver(g, Variant.AB)
    assert solver.rounds_left(_state(g, variant=Variant.AB)) == solver.value()
    assert solver.rounds_left(_state(g, round_class=0b1, alice=False, variant=Variant.AB)) == solver.value(0)


def test_distance_three_opening_order6():
    for g in enumerate_graphs(6, connected_only=True):
        for u in range(6):
            if max(gr.bfs_distances(g, u)) >= 3:
                assert game_value(g, "A", u) >= 3 and game_value(g, "AB", u) >= 3
