"""Vertex-deletion profiles and lower/upper/mixed game-vertex-criticality."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Protocol

from .canon import automorphism_orbits, canonical_form
from .coloring_game import chi_g
from .graph import Graph, delete_vertex, iter_bits
from .independence_game import Variant, game_value
from .indicated_game import chi_i
from .table import SolveStats


class InvariantId(str, Enum):
    CHI_G = "chi_g"
    CHI_I = "chi_i"
    CHI_IG_A = "chi_ig_a"
    CHI_IG_AB = "chi_ig_ab"


class CriticalClass(str, Enum):
    LOWER = "LowerCritical"
    UPPER = "UpperCritical"
    MIXED = "MixedCritical"
    NOT_CRITICAL = "NotCritical"


class Flavor(str, Enum):
    LOWER = "Lower"
    UPPER = "Upper"
    MIXED = "Mixed"
    ANY = "Any"


class ValueCache(Protocol):
    def get(self, key: tuple[bytes, str]) -> Optional[int]: ...

    def put(self, key: tuple[bytes, str], value: int) -> None: ...


class MemoryCache:
    def __init__(self):
        self._data: dict[tuple[bytes, str], int] = {}

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value):
        self._data[key] = value

    def __len__(self):
        return len(self._data)


def invariant_value(g: Graph, inv: InvariantId | str, *, budget: Optional[int] = None,
                    stats: Optional[SolveStats] = None, cache: Optional[ValueCache] = None,
                    symmetry: Optional[bool] = None) -> int:
    """phi(g) for one of the four invariants; the order-0 graph has value 0."""
    inv = InvariantId(inv)
    if g.order == 0:
        return 0
    key = None
    if cache is not None:
        key = (canonical_form(g), inv.value)
        hit = cache.get(key)
        if hit is not None:
            return hit
    if inv is InvariantId.CHI_G:
        value = chi_g(g, budget=budget, stats=stats, symmetry=symmetry)
    elif inv is InvariantId.CHI_I:
        value = chi_i(g, budget=budget, stats=stats, symmetry=symmetry)
    else:
        variant = Variant.A if inv is InvariantId.CHI_IG_A else Variant.AB
        value = game_value(g, variant, budget=budget, stats=stats, symmetry=symmetry)
    if cache is not None:
        cache.put(key, value)
    return value


@dataclass(frozen=True)
class VertexDelta:
    vertex: int
    label: str
    value: int
    delta: int


@dataclass(frozen=True)
class CriticalityProfile:
    invariant: InvariantId
    base_value: int
    per_vertex: tuple[VertexDelta, ...]
    critical_class: CriticalClass = field(default=CriticalClass.NOT_CRITICAL)

    @property
    def deltas(self) -> list[int]:
        return [d.delta for d in self.per_vertex]

    def to_dict(self) -> dict:
        return {
            "invariant": self.invariant.value,
            "k": self.base_value,
            "class": self.critical_class.value,
            "per_vertex": [
                {"vertex": d.vertex, "label": d.label, "value": d.value, "delta": d.delta}
                for d in self.per_vertex
            ],
        }


def classify(deltas: list[int], order: int) -> CriticalClass:
    """Class label from the deltas phi(G) - phi(G - x).

    Single-vertex graphs are never critical: their only deletion leaves the
    order-0 graph, for which no game is played.
    """
    if order < 2 or any(d == 0 for d in deltas):
        return CriticalClass.NOT_CRITICAL
    if all(d > 0 for d in deltas):
        return CriticalClass.LOWER
    if all(d < 0 for d in deltas):
        return CriticalClass.UPPER
    return CriticalClass.MIXED


def _orbit_representatives(g: Graph) -> dict[int, int]:
    rep = {}
    for orb in automorphism_orbits(g):
        first = (orb & -orb).bit_length() - 1
        for v in iter_bits(orb):
            rep[v] = first
    return rep


def delta_profile(g: Graph, inv: InvariantId | str, *, budget: Optional[int] = None,
                  stats: Optional[SolveStats] = None, cache: Optional[ValueCache] = None,
                  use_orbits: bool = True) -> CriticalityProfile:
    """phi(g) and phi(g - x) for every vertex, with the resulting class.

    Vertices in one automorphism orbit have isomorphic deletions, so only
    one per orbit is solved when ``use_orbits``.  Raises ``BudgetExceeded``
    when a solve runs out of budget.
    """
    inv = InvariantId(inv)
    if g.order < 1:
        raise ValueError("profile needs at least one vertex")
    kw = dict(budget=budget, stats=stats, cache=cache)
    base = invariant_value(g, inv, **kw)
    rep = _orbit_representatives(g) if use_orbits else {v: v for v in range(g.order)}
    solved: dict[int, int] = {}
    rows = []
    for v in range(g.order):
        r = rep[v]
        if r not in solved:
            solved[r] = invariant_value(delete_vertex(g, r), inv, **kw)
        value = solved[r]
        rows.append(VertexDelta(v, g.label(v), value, base - value))
    cls = classify([d.delta for d in rows], g.order)
    return CriticalityProfile(inv, base, tuple(rows), cls)


def is_k_critical(g: Graph, inv: InvariantId | str, k: int, flavor: Flavor | str = Flavor.ANY, *,
                  budget: Optional[int] = None, stats: Optional[SolveStats] = None,
                  cache: Optional[ValueCache] = None) -> bool:
    """Whether ``g`` is k-phi-(flavor)-game-vertex-critical.

    Vertex-deleted values are examined first and the search stops at the
    first one that rules the flavour out; phi(g) itself is solved last.
    """
    inv = InvariantId(inv)
    flavor = Flavor(flavor)
    if g.order < 2:
        return False
    kw = dict(budget=budget, stats=stats, cache=cache)
    rep = _orbit_representatives(g)
    lower = upper = False
    for r in sorted(set(rep.values())):
        value = invariant_value(delete_vertex(g, r), inv, **kw)
        if value == k:
            return False
        if value < k:
            lower = True
            if flavor is Flavor.UPPER:
                return False
        else:
            upper = True
            if flavor is Flavor.LOWER:
                return False
    if flavor is Flavor.MIXED and not (lower and upper):
        return False
    return invariant_value(g, inv, **kw) == k
