"""Exact solver for the A- and AB-independence coloring games.

Round ``i`` uses colour ``i``.  Inside a round the players alternate, each
colouring an uncoloured vertex with no neighbour already coloured in that
round; moves are compulsory and the round ends when no such vertex is left.
Alice minimises and Bob maximises the number of rounds.  In variant ``A``
Alice opens every round; in ``AB`` the next round is opened by whoever did
not end the previous one, which is simply the player whose turn it is.

Search positions are ``(uncoloured, available, alice_to_move)`` where
``available`` is the set still playable in the current round.  The rest of
the game depends on nothing else, so the current round's colour class
itself is not stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .graph import Graph, GraphError, iter_bits
from .table import BudgetExceeded, SolveStats, TranspositionTable, make_symmetry


class Variant(str, Enum):
    A = "A"
    AB = "AB"


@dataclass(frozen=True)
class IndepGameState:
    """A position: ``finished`` holds vertices coloured in completed rounds,
    ``round_class`` those coloured in the current round."""

    graph: Graph
    finished: int
    round_class: int
    alice_to_move: bool
    variant: Variant

    def __post_init__(self):
        if self.finished & self.round_class:
            raise ValueError("round class overlaps finished vertices")
        for v in iter_bits(self.round_class):
            if self.graph.adj[v] & self.round_class:
                raise ValueError("round class is not independent")

    @property
    def uncolored(self) -> int:
        return self.graph.vertex_mask & ~self.finished & ~self.round_class


def legal_round_moves(state: IndepGameState) -> int:
    """Uncoloured vertices with no neighbour in the current round, as a bitset.

    An empty round class means the round is just starting, so every
    uncoloured vertex is legal.
    """
    blocked = 0
    for v in iter_bits(state.round_class):
        blocked |= state.graph.adj[v]
    return state.uncolored & ~blocked


class IndependenceGameSolver:
    def __init__(self, g: Graph, variant: Variant | str, symmetry: Optional[bool] = None,
                 budget: Optional[int] = None, table: Optional[TranspositionTable] = None):
        self.g = g
        self.variant = Variant(variant)
        self.sym = make_symmetry(g, symmetry)
        self.budget = budget
        self.table = table if table is not None else TranspositionTable()
        self.stats = SolveStats()

    def remaining(self, uncolored: int, available: int, alice: bool) -> int:
        """Rounds still to be started after the current one, under optimal play."""
        adj = self.g.adj
        table = self.table
        stats = self.stats
        budget = self.budget
        sym = self.sym
        variant_a = self.variant is Variant.A

        def rec(uncolored, available, alice):
            if not available:
                if not uncolored:
                    return 0
                return 1 + rec(uncolored, uncolored, True if variant_a else alice)
            if sym is not None:
                u_key, a_key = sym.canon_pair(uncolored, available)
            else:
                u_key, a_key = uncolored, available
            key = (u_key, a_key, alice)
            hit = table.get(key)
            if hit is not None:
                stats.hits += 1
                return hit
            stats.expanded += 1
            if budget is not None and stats.expanded > budget:
                raise BudgetExceeded(budget)
            # vertices cut off from this round force at least one more round
            floor = 1 if uncolored & ~available else 0
            best = None
            for v in iter_bits(available):
                bit = 1 << v
                val = rec(uncolored & ~bit, available & ~bit & ~adj[v], not alice)
                if best is None or (val < best if alice else val > best):
                    best = val
                    if alice and best == floor:
                        break
            table.put(key, best)
            return best

        return rec(uncolored, available, alice)

    def value(self, first_move: Optional[int] = None) -> int:
        g = self.g
        if g.order == 0:
            return 0
        full = g.vertex_mask
        if first_move is None:
            return 1 + self.remaining(full, full, True)
        if not 0 <= first_move < g.order:
            raise GraphError(f"forced move {first_move} out of range")
        bit = 1 << first_move
        return 1 + self.remaining(full & ~bit, full & ~bit & ~g.adj[first_move], False)

    def rounds_left(self, state: IndepGameState) -> int:
        """Rounds still to be played from ``state``, counting the current round
        when it has begun (a non-empty round class)."""
        if not state.round_class:
            if not state.uncolored:
                return 0
            return 1 + self.remaining(state.uncolored, state.uncolored, state.alice_to_move)
        return 1 + self.remaining(state.uncolored, legal_round_moves(state), state.alice_to_move)

    def principal_variation(self, first_move: Optional[int] = None) -> list[list[int]]:
        """One optimal game as the list of rounds (vertices in move order).

        Ties are broken towards the lowest vertex index.
        """
        g = self.g
        adj = g.adj
        uncolored = g.vertex_mask
        available = uncolored
        alice = True
        rounds: list[list[int]] = [[]] if g.order else []
        forced = first_move
        while uncolored:
            if not available:
                rounds.append([])
                available = uncolored
                if self.variant is Variant.A:
                    alice = True
                continue
            if forced is not None:
                choice, forced = forced, None
            else:
                choice, best = None, None
                for v in iter_bits(available):
                    bit = 1 << v
                    val = self.remaining(uncolored & ~bit, available & ~bit & ~adj[v], not alice)
                    if best is None or (val < best if alice else val > best):
                        choice, best = v, val
            bit = 1 << choice
            rounds[-1].append(choice)
            uncolored &= ~bit
            available &= ~bit & ~adj[choice]
            alice = not alice
        return rounds


def game_value(g: Graph, variant: Variant | str, first_move: Optional[int] = None, *,
               symmetry: Optional[bool] = None, budget: Optional[int] = None,
               stats: Optional[SolveStats] = None) -> int:
    """Number of rounds under optimal play; ``first_move`` prescribes Alice's opening vertex."""
    solver = IndependenceGameSolver(g, variant, symmetry=symmetry, budget=budget)
    try:
        return solver.value(first_move)
    finally:
        if stats is not None:
            stats.add(solver.stats)


def chi_ig_a(g: Graph, **kwargs) -> int:
    return game_value(g, Variant.A, **kwargs)


def chi_ig_ab(g: Graph, **kwargs) -> int:
    return game_value(g, Variant.AB, **kwargs)
