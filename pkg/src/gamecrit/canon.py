"""Canonical labelling and automorphism groups by individualisation-refinement.

The search refines an ordered vertex partition to equitability, individualises
each vertex of the first non-singleton cell in turn and keeps the largest
relabelled adjacency certificate seen at a discrete leaf.  Leaves with equal
certificates yield automorphisms, which prune sibling subtrees in the same
orbit of the current point stabiliser.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph, iter_bits
from .graph6 import emit_graph6


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        for j in range(len(cells)):
            splitter = cells[j]
            out = []
            split_any = False
            for cell in cells:
                if cell & (cell - 1) == 0:
                    out.append(cell)
                    continue
                buckets: dict[int, int] = {}
                for v in iter_bits(cell):
                    c = (adj[v] & splitter).bit_count()
                    buckets[c] = buckets.get(c, 0) | (1 << v)
                if len(buckets) > 1:
                    split_any = True
                    out.extend(buckets[c] for c in sorted(buckets))
                else:
                    out.append(cell)
            if split_any:
                cells = out
                changed = True
                break
    return cells


def _certificate(adj: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for w in iter_bits(adj[v]):
            row |= 1 << pos[w]
        rows.append(row)
    return tuple(rows)


def _orbit(v: int, gens: list[tuple[int, ...]]) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


class _Search:
    def __init__(self, g: Graph, colors: Optional[Sequence[int]] = None):
        self.adj = g.adj
        self.n = g.order
        self.first: Optional[tuple[tuple[int, ...], list[int]]] = None
        self.best: Optional[tuple[tuple[int, ...], list[int]]] = None
        self.gens: list[tuple[int, ...]] = []
        if colors is None:
            self.start = [g.vertex_mask] if self.n else []
        else:
            groups: dict[int, int] = {}
            for v, c in enumerate(colors):
                groups[c] = groups.get(c, 0) | (1 << v)
            self.start = [groups[c] for c in sorted(groups)]

    def run(self) -> None:
        if self.n:
            self._visit(self.start, [])

    def _leaf(self, order: list[int]) -> None:
        cert = _certificate(self.adj, order)
        if self.first is None:
            self.first = self.best = (cert, order)
            return
        for ref_cert, ref_order in (self.first, self.best):
            if cert == ref_cert:
                perm = [0] * self.n
                for a, b in zip(ref_order, order):
                    perm[a] = b
                perm_t = tuple(perm)
                if any(perm_t[v] != v for v in range(self.n)):
                    self.gens.append(perm_t)
                return
        if cert > self.best[0]:
            self.best = (cert, order)

    def _visit(self, cells: list[int], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        target = -1
        for i, c in enumerate(cells):
            if c & (c - 1):
                target = i
                break
        if target < 0:
            self._leaf([c.bit_length() - 1 for c in cells])
            return
        cell = cells[target]
        done: list[int] = []
        for v in iter_bits(cell):
            if done:
                stab = [g for g in self.gens if all(g[p] == p for p in prefix)]
                if stab and _orbit(v, stab).intersection(done):
                    continue
            done.append(v)
            child = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
            self._visit(child, prefix + [v])


def canonical_labeling(g: Graph, colors: Optional[Sequence[int]] = None) -> list[int]:
    """Vertex order whose relabelling yields the canonical graph.

    ``colors`` optionally gives an invariant vertex colouring that isomorphisms
    must respect (colour classes are ordered by colour value).
    """
    s = _Search(g, colors)
    s.run()
    return s.best[1] if s.best else []


def canonical_graph(g: Graph, colors: Optional[Sequence[int]] = None) -> Graph:
    order = canonical_labeling(g, colors)
    perm = [0] * g.order
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-complete invariant: the graph6 encoding of the canonical relabelling."""
    return emit_graph6(canonical_graph(g)).encode("ascii")


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    s = _Search(g)
    s.run()
    return s.gens


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbits of Aut(g) as bitsets, ordered by smallest vertex."""
    gens = automorphism_generators(g)
    seen = 0
    out = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        orb = sum(1 << w for w in _orbit(v, gens))
        seen |= orb
        out.append(orb)
    return out


class GroupTooLarge(RuntimeError):
    pass


def automorphism_group(g: Graph, limit: int = 100_000) -> list[tuple[int, ...]]:
    """All automorphisms (identity first) as permutation tuples; raises if more than ``limit``."""
    identity = tuple(range(g.order))
    gens = automorphism_generators(g)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens:
                r = tuple(q[p[v]] for v in range(g.order))
                if r not in elements:
                    elements.add(r)
                    nxt.append(r)
                    if len(elements) > limit:
                        raise GroupTooLarge(f"automorphism group exceeds {limit} elements")
        frontier = nxt
    elements.discard(identity)
    return [identity] + sorted(elements)
