"""Exact solver for the classical coloring game and the game chromatic number.

Alice moves first, the players alternate and nobody may pass.  Bob wins as
soon as some uncoloured vertex sees every one of the ``k`` colours in its
neighbourhood; Alice wins when every vertex is coloured.

Internally a position is the sorted tuple of non-empty colour classes.
Colour names carry no meaning to the game, so sorting the classes identifies
all positions that differ by a permutation of colours, and an unused colour
is one move rather than ``k - used`` equivalent moves.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, chromatic_number, iter_bits
from .table import BudgetExceeded, SolveStats, TranspositionTable, make_symmetry

ALICE = "Alice"
BOB = "Bob"


class IllegalMove(ValueError):
    pass


@dataclass(frozen=True)
class ColoringState:
    """A position of the coloring game; ``colors[v] == 0`` means uncoloured."""

    graph: Graph
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if len(self.colors) != self.graph.order:
            raise ValueError("one colour entry per vertex required")
        if self.k < 1:
            raise ValueError("palette size must be positive")
        for v, c in enumerate(self.colors):
            if not 0 <= c <= self.k:
                raise ValueError(f"colour {c} outside 0..{self.k}")
            if c:
                for w in iter_bits(self.graph.adj[v]):
                    if self.colors[w] == c:
                        raise ValueError(f"improper colouring on edge {v}-{w}")

    @classmethod
    def initial(cls, g: Graph, k: int) -> "ColoringState":
        return cls(g, (0,) * g.order, k)

    @property
    def mover(self) -> str:
        colored = sum(1 for c in self.colors if c)
        return ALICE if colored % 2 == 0 else BOB

    def classes(self) -> tuple[int, ...]:
        masks: dict[int, int] = {}
        for v, c in enumerate(self.colors):
            if c:
                masks[c] = masks.get(c, 0) | (1 << v)
        return tuple(sorted(masks.values()))

    def colored_mask(self) -> int:
        return sum(1 << v for v, c in enumerate(self.colors) if c)

    def play(self, v: int, color: int) -> "ColoringState":
        if color not in legal_colors(self, v):
            raise IllegalMove(f"colour {color} is not legal on vertex {v}")
        colors = list(self.colors)
        colors[v] = color
        return ColoringState(self.graph, tuple(colors), self.k)

    def is_blocked(self) -> bool:
        """Some uncoloured vertex sees all ``k`` colours."""
        g = self.graph
        for v, c in enumerate(self.colors):
            if not c and len({self.colors[w] for w in iter_bits(g.adj[v])} - {0}) == self.k:
                return True
        return False

    def is_terminal(self) -> bool:
        return self.is_blocked() or all(self.colors)


def legal_colors(state: ColoringState, v: int) -> set[int]:
    if state.colors[v]:
        raise IllegalMove(f"vertex {v} is already coloured")
    seen = {state.colors[w] for w in iter_bits(state.graph.adj[v])}
    return set(range(1, state.k + 1)) - seen


class ColoringGameSolver:
    """Memoised AND/OR search for one graph and palette size."""

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

    def _key(self, classes: tuple[int, ...]):
        return self.sym.canon_sets(classes) if self.sym is not None else classes

    def wins(self, classes: tuple[int, ...], colored: int) -> bool:
        """True iff Alice wins from the position (mover follows from parity)."""
        adj = self.g.adj
        k = self.k
        full = self.g.vertex_mask
        table = self.table
        stats = self.stats
        budget = self.budget
        key_of = self._key

        def rec(classes, colored):
            key = key_of(classes)
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
                    # no uncoloured vertex can ever see all k colours
                    result = True
            if result is None:
                alice = colored.bit_count() % 2 == 0
                n_cls = len(classes)
                result = not alice
                for v in iter_bits(uncolored):
                    bit = 1 << v
                    a = adj[v]
                    options = [i for i in range(n_cls) if not classes[i] & a]
                    if n_cls < k:
                        if alice:
                            options.append(-1)
                        else:
                            options.insert(0, -1)
                    for i in options:
                        if i < 0:
                            child = tuple(sorted(classes + (bit,)))
                        else:
                            child = tuple(sorted(classes[:i] + (classes[i] | bit,) + classes[i + 1:]))
                        if rec(child, colored | bit) == alice:
                            result = alice
                            break
                    if result == alice:
                        break
            table.put(key, result)
            return result

        return rec(tuple(sorted(classes)), colored)

    def state_wins(self, state: ColoringState) -> bool:
        return self.wins(state.classes(), state.colored_mask())


def alice_wins(g: Graph, k: int, first_move: Optional[tuple[int, int]] = None, *,
               symmetry: Optional[bool] = None, budget: Optional[int] = None,
               stats: Optional[SolveStats] = None) -> bool:
    """Whether Alice, moving first, can force a complete colouring with ``k`` colours.

    ``first_move=(v, c)`` prescribes Alice's opening and evaluates the rest
    of the game with Bob to move.
    """
    solver = ColoringGameSolver(g, k, symmetry=symmetry, budget=budget)
    state = ColoringState.initial(g, k)
    if first_move is not None:
        v, c = first_move
        if not 0 <= v < g.order:
            raise IllegalMove(f"vertex {v} out of range")
        state = state.play(v, c)
    try:
        return solver.state_wins(state)
    finally:
        if stats is not None:
            stats.add(solver.stats)


def chi_g(g: Graph, *, symmetry: Optional[bool] = None, budget: Optional[int] = None,
          stats: Optional[SolveStats] = None) -> int:
    """Game chromatic number; every k from chi(g) to max degree + 1 is tried in turn.

    ``budget`` caps states expanded per palette size.
    """
    if g.order == 0:
        return 0
    for k in range(chromatic_number(g), g.max_degree + 2):
        if alice_wins(g, k, symmetry=symmetry, budget=budget, stats=stats):
            return k
    raise AssertionError("Alice always wins with max degree + 1 colours")


def best_move(state: ColoringState, *, symmetry: Optional[bool] = None) -> tuple[int, int]:
    """A value-preserving move; ties go to the lowest vertex, then the lowest colour."""
    if state.is_terminal():
        raise IllegalMove("no moves from a terminal position")
    solver = ColoringGameSolver(state.graph, state.k, symmetry=symmetry)
    alice = state.mover == ALICE
    first = None
    for v in range(state.graph.order):
        if state.colors[v]:
            continue
        for c in sorted(legal_colors(state, v)):
            if first is None:
                first = (v, c)
            if solver.state_wins(state.play(v, c)) == alice:
                return v, c
    if first is None:
        raise GraphError("no legal move")
    return first
