from __future__ import annotations

import random

import pytest

import naive
from gamecrit import graph as gr
from gamecrit.coloring_game import (ALICE, BOB, ColoringGameSolver, ColoringState, IllegalMove,
                                    alice_wins, best_move, chi_g, legal_colors)
from gamecrit.enumeration import enumerate_graphs
from gamecrit.indicated_game import ann_wins, chi_i, order_wins
from gamecrit.table import BudgetExceeded, SolveStats, TranspositionTable


def small_graphs(max_order=5):
    for n in range(1, max_order + 1):
        yield from enumerate_graphs(n)


# -- coloring game -----------------------------------------------------

def test_legal_colors():
    assert legal_colors(ColoringState.initial(gr.path(3), 3), 1) == {1, 2, 3}
    k3 = ColoringState(gr.complete(3), (1, 2, 0), 3)
    assert legal_colors(k3, 2) == {3}
    p3 = ColoringState(gr.path(3), (1, 0, 1), 2)
    assert legal_colors(p3, 1) == {2}
    with pytest.raises(IllegalMove):
        legal_colors(p3, 0)


def test_state_validation():
    with pytest.raises(ValueError):
        ColoringState(gr.path(2), (1, 1), 2)
    with pytest.raises(ValueError):
        ColoringState(gr.path(2), (3, 0), 2)
    st = ColoringState(gr.path(3), (1, 0, 0), 2)
    assert st.mover == BOB
    assert ColoringState.initial(gr.path(3), 2).mover == ALICE


def test_chi_g_examples():
    assert chi_g(gr.complete(2)) == 2
    assert chi_g(gr.path(4)) == chi_g(gr.cycle(3)) == chi_g(gr.cycle(4)) == 3
    assert chi_g(gr.path(5)) == 3
    assert chi_g(gr.empty_graph(0)) == 0
    assert chi_g(gr.complete(1)) == 1
    assert alice_wins(gr.star(3), 2)
    assert not alice_wins(gr.path(4), 2)


def test_delta_plus_one_always_wins():
    for g in small_graphs(5):
        assert alice_wins(g, g.max_degree + 1)


def test_kmm4_and_cone():
    h = gr.complete_bipartite_minus_matching(4)
    assert chi_g(h) == 4
    assert all(chi_g(gr.delete_vertex(h, v)) == 3 for v in range(8))
    assert chi_g(gr.cone(h)) == 3


def test_forced_first_move():
    g = gr.path(4)
    # an interior opening keeps the 3-colour win
    assert alice_wins(g, 3, first_move=(1, 1))
    with pytest.raises(IllegalMove):
        alice_wins(g, 2, first_move=(9, 1))
    with pytest.raises(IllegalMove):
        alice_wins(g, 2, first_move=(0, 3))


@pytest.mark.parametrize("symmetry", [False, True])
def test_chi_g_oracle_order5(symmetry):
    for g in small_graphs(5):
        for k in range(1, 5):
            assert alice_wins(g, k, symmetry=symmetry) == naive.coloring_game(g, k), (g, k)


def test_color_relabel_invariance():
    rng = random.Random(1)
    g = gr.cycle(5)
    solver = ColoringGameSolver(g, 3)
    for _ in range(30):
        colors = [0] * 5
        for v in rng.sample(range(5), 2):
            free = sorted(legal_colors(ColoringState(g, tuple(colors), 3), v))
            colors[v] = rng.choice(free)
        perm = [0] + rng.sample([1, 2, 3], 3)
        a = solver.state_wins(ColoringState(g, tuple(colors), 3))
        b = solver.state_wins(ColoringState(g, tuple(perm[c] for c in colors), 3))
        assert a == b


def test_best_move():
    assert best_move(ColoringState.initial(gr.complete(2), 2)) == (0, 1)
    st = ColoringState(gr.path(3), (1, 0, 1), 2)
    # two colored means Alice to move; the only move is the centre
    assert best_move(st) == (1, 2)
    # Bob on P4 with 2 colors after Alice's end move: his reply must keep the win
    st = ColoringState(gr.path(4), (1, 0, 0, 0), 2)
    v, c = best_move(st)
    assert not ColoringGameSolver(gr.path(4), 2).state_wins(st.play(v, c))
    with pytest.raises(IllegalMove):
        best_move(ColoringState(gr.complete(2), (1, 2), 2))


def test_budget_and_stats():
    stats = SolveStats()
    with pytest.raises(BudgetExceeded):
        alice_wins(gr.complete_bipartite_minus_matching(4), 3, budget=5, stats=stats)
    assert stats.expanded >= 5
    assert chi_g(gr.cycle(5), stats=stats) == 3


def test_determinism():
    g = gr.disjoint_union(gr.cycle(5), gr.path(3))
    assert len({chi_g(g) for _ in range(3)}) == 1


def test_transposition_table():
    t = TranspositionTable(capacity=16, seed=3)
    for i in range(100):
        t.put(i, i % 2 == 0)
    assert len(t) <= 16
    t.put("a", True)
    t.put("a", True)
    assert t.get("a") is True and "a" in t


# -- indicated game ----------------------------------------------------

def test_chi_i_examples():
    assert chi_i(gr.complete(1)) == 1
    assert not ann_wins(gr.cycle(5), 2)
    for n in (3, 5, 7):
        c = gr.cycle(n)
        assert chi_i(c) == 3 and chi_i(gr.delete_vertex(c, 0)) == 2
    assert chi_i(gr.path(6)) == 2
    assert chi_i(gr.fig1_graph()) == 3
    assert chi_i(gr.twisted_diamond()) == 4


def test_connected_bipartite_is_two():
    for n in range(2, 7):
        for g in enumerate_graphs(n, connected_only=True):
            if gr.bipartition(g) is not None:
                assert ann_wins(g, 2)


def test_fig1_selection_order():
    g = gr.fig1_graph()
    order = [gr.FIG1_LABELS.index(c) for c in "feghxdcba"]
    assert order_wins(g, 3, order)
    assert not order_wins(g, 2, order)
    with pytest.raises(ValueError):
        order_wins(g, 3, [0, 1])


@pytest.mark.parametrize("symmetry", [False, True])
def test_chi_i_oracle_order5(symmetry):
    for g in small_graphs(5):
        for k in range(1, 5):
            assert ann_wins(g, k, symmetry=symmetry) == naive.indicated_game(g, k), (g, k)


def test_chi_i_bounds():
    for g in small_graphs(5):
        v = chi_i(g)
        assert gr.chromatic_number(g) <= v <= g.max_degree + 1


def test_chi_g_bounds_order6():
    for g in enumerate_graphs(6):
        assert gr.chromatic_number(g) <= chi_g(g) <= g.max_degree + 1


def test_two_copies_kmm4_deletion_strategy():
    h = gr.complete_bipartite_minus_matching(4)
    g = gr.delete_vertex(gr.disjoint_union(h, h), 0)  # delete a_1; its partner b_1 is now vertex 3
    assert not alice_wins(g, 2)
    assert alice_wins(g, 3, first_move=(3, 1))
