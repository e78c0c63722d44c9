"""Exact solver for the indicated coloring game and the indicated chromatic number.

Ann repeatedly selects an uncoloured vertex and Ben gives it any colour not
used on its neighbours.  Ben wins once some uncoloured vertex sees all ``k``
colours; selecting a vertex with no legal colour is the same event.
Positions are taken at Ann's turn, so Ben's reply is folded into each of
Ann's selections.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph, chromatic_number, iter_bits
from .table import BudgetExceeded, SolveStats, TranspositionTable, make_symmetry


class IndicatedGameSolver:
    def __init__(self, g: Graph, k: int, symmetry: Optional[bool] = None,
                 budget: Optional[int] = None, table: Optional[TranspositionTable] = None):
        if k < 1:
            raise ValueError("palette size must be positive")
        self.g = g
        self.k = k
        self.sym = make_symmetry(g, symmetry)
        self.budget = budget
        self.table = table if table is not None else TranspositionTable()
        self.stats = SolveStats()

    def wins(self, classes: tuple[int, ...] = (), colored: int = 0) -> bool:
        """True iff Ann, about to select, can force a complete colouring."""
        adj = self.g.adj
        k = self.k
        full = self.g.vertex_mask
        table = self.table
        stats = self.stats
        budget = self.budget
        sym = self.sym

        def rec(classes, colored):
            key = sym.canon_sets(classes) if sym is not None else classes
            hit = table.get(key)
            if hit is not None:
                stats.hits += 1
                return hit
            stats.expanded += 1
            if budget is not None and stats.expanded > budget:
                raise BudgetExceeded(budget)
            uncolored = full & ~colored
            result = None
            if not uncolored:
                result = True
            else:
                danger = False
                for v in iter_bits(uncolored):
                    a = adj[v]
                    used = 0
                    for c in classes:
                        if c & a:
                            used += 1
                    if used == k:
                        result = False
                        break
                    if used + (a & uncolored).bit_count() >= k:
                        danger = True
                if result is None and not danger:
                    result = True
            if result is None:
                result = False
                n_cls = len(classes)
                for v in iter_bits(uncolored):
                    bit = 1 << v
                    a = adj[v]
                    ok = True
                    # Ben tries a fresh colour first: it is usually his strongest reply
                    if n_cls < k and not rec(tuple(sorted(classes + (bit,))), colored | bit):
                        ok = False
                    if ok:
                        for i in range(n_cls):
                            if classes[i] & a:
                                continue
                            child = tuple(sorted(classes[:i] + (classes[i] | bit,) + classes[i + 1:]))
                            if not rec(child, colored | bit):
                                ok = False
                                break
                    if ok:
                        result = True
                        break
            table.put(key, result)
            return result

        return rec(tuple(sorted(classes)), colored)


def ann_wins(g: Graph, k: int, *, symmetry: Optional[bool] = None, budget: Optional[int] = None,
             stats: Optional[SolveStats] = None) -> bool:
    solver = IndicatedGameSolver(g, k, symmetry=symmetry, budget=budget)
    try:
        return solver.wins()
    finally:
        if stats is not None:
            stats.add(solver.stats)


def chi_i(g: Graph, *, symmetry: Optional[bool] = None, budget: Optional[int] = None,
          stats: Optional[SolveStats] = None) -> int:
    """Indicated chromatic number, trying k = chi(g), ..., max degree + 1 in order."""
    if g.order == 0:
        return 0
    for k in range(chromatic_number(g), g.max_degree + 2):
        if ann_wins(g, k, symmetry=symmetry, budget=budget, stats=stats):
            return k
    raise AssertionError("Ann always wins with max degree + 1 colours")


def order_wins(g: Graph, k: int, order: Sequence[int]) -> bool:
    """Whether Ann wins by selecting vertices in the fixed ``order`` whatever Ben does."""
    if sorted(order) != list(range(g.order)):
        raise ValueError("order must list every vertex exactly once")
    adj = g.adj

    def rec(i: int, colors: list[int]) -> bool:
        if i == len(order):
            return True
        v = order[i]
        free = set(range(1, k + 1)) - {colors[w] for w in iter_bits(adj[v])}
        if not free:
            return False
        for c in free:
            colors[v] = c
            blocked = any(
                not colors[u] and len({colors[w] for w in iter_bits(adj[u])} - {0}) == k
                for u in range(g.order)
            )
            ok = not blocked and rec(i + 1, colors)
            colors[v] = 0
            if not ok:
                return False
        return True

    return rec(0, [0] * g.order)
