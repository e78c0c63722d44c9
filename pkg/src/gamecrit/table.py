"""Transposition table and automorphism-based state canonicalisation."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Hashable, Optional, Sequence

from .canon import GroupTooLarge, automorphism_group
from .graph import Graph

DEFAULT_CAPACITY = 1 << 24
SYMMETRY_MAX_ORDER = 16
SYMMETRY_MAX_ELEMENTS = 2048


class BudgetExceeded(RuntimeError):
    """A solve expanded more states than its budget allowed."""

    def __init__(self, budget: int):
        super().__init__(f"state budget of {budget} exhausted")
        self.budget = budget


@dataclass
class SolveStats:
    expanded: int = 0
    hits: int = 0

    def add(self, other: "SolveStats") -> None:
        self.expanded += other.expanded
        self.hits += other.hits


class TranspositionTable:
    """Bounded memo from canonical state keys to game values.

    When full, a random eighth of the entries is evicted; evicted values are
    simply recomputed later.  Writes for an existing key must agree with the
    stored value.
    """

    def __init__(self, capacity: int = DEFAULT_CAPACITY, seed: int = 0):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self.eviction = "random"
        self._data: dict = {}
        self._rng = random.Random(seed)

    def get(self, key: Hashable):
        return self._data.get(key)

    def put(self, key: Hashable, value) -> None:
        old = self._data.get(key)
        if old is not None:
            if old != value:
                raise AssertionError(f"conflicting values for one state: {old!r} vs {value!r}")
            return
        if len(self._data) >= self.capacity:
            victims = self._rng.sample(list(self._data), max(1, self.capacity // 8))
            for victim in victims:
                del self._data[victim]
        self._data[key] = value

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._data


class Symmetry:
    """Maps vertex bitsets through a set of automorphisms via byte lookup tables.

    Any set of automorphisms gives a sound key (states sharing a key are
    images of each other); the full group gives the coarsest one.
    """

    def __init__(self, order: int, perms: Sequence[Sequence[int]]):
        self.order = order
        self.nchunks = max(1, (order + 7) // 8)
        self.tables = []
        identity = tuple(range(order))
        for p in perms:
            if tuple(p) == identity:
                continue
            chunks = []
            for c in range(self.nchunks):
                table = [0] * 256
                for byte in range(256):
                    m = 0
                    for b in range(8):
                        v = 8 * c + b
                        if byte >> b & 1 and v < order:
                            m |= 1 << p[v]
                    table[byte] = m
                chunks.append(table)
            self.tables.append(chunks)

    def __len__(self) -> int:
        return len(self.tables) + 1

    @staticmethod
    def _apply(chunks, mask: int) -> int:
        out = 0
        for table in chunks:
            out |= table[mask & 255]
            mask >>= 8
        return out

    def canon_sets(self, sets: tuple[int, ...]) -> tuple[int, ...]:
        """Smallest sorted image of an unordered family of bitsets."""
        best = sets
        apply = self._apply
        for chunks in self.tables:
            img = tuple(sorted(apply(chunks, s) for s in sets))
            if img < best:
                best = img
        return best

    def canon_pair(self, a: int, b: int) -> tuple[int, int]:
        best = (a, b)
        apply = self._apply
        for chunks in self.tables:
            img = (apply(chunks, a), apply(chunks, b))
            if img < best:
                best = img
        return best


def make_symmetry(g: Graph, enabled: Optional[bool] = None) -> Optional[Symmetry]:
    """Symmetry helper for ``g``, or ``None`` when disabled or trivial.

    ``enabled=None`` means on for graphs of order at most 16.
    """
    if enabled is None:
        enabled = g.order <= SYMMETRY_MAX_ORDER
    if not enabled or g.order == 0:
        return None
    try:
        perms = automorphism_group(g, limit=SYMMETRY_MAX_ELEMENTS)
    except GroupTooLarge:
        return None
    if len(perms) == 1:
        return None
    return Symmetry(g.order, perms)
