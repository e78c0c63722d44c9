"""Bitset-backed simple graphs, the named families used throughout, and
basic structural predicates.

Vertices are ``0..order-1``; a vertex set is a Python ``int`` used as a bitset.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_ORDER = 32


class GraphError(ValueError):
    """Raised for invalid graph construction or out-of-range arguments."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def _check_order(n: int) -> None:
    if n < 0 or n > MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")


class Graph:
    """Immutable simple undirected graph on at most 32 vertices.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitset.  ``labels`` is an
    optional tuple of display names that travels through vertex deletion;
    it does not take part in equality.
    """

    __slots__ = ("order", "adj", "labels")

    def __init__(self, order: int, adj: Sequence[int], labels: Optional[Sequence[str]] = None):
        _check_order(order)
        if len(adj) != order:
            raise GraphError("adjacency length does not match order")
        full = (1 << order) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside the graph")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        if labels is not None and len(labels) != order:
            raise GraphError("labels length does not match order")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        _check_order(order)
        adj = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, adj, labels)

    # -- basic queries -------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        n = self.order
        adj = [0] * n
        for v in range(n):
            row = 0
            for w in iter_bits(self.adj[v]):
                row |= 1 << perm[w]
            adj[perm[v]] = row
        return Graph(n, adj)

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph on ``mask``; surviving vertices keep their relative order."""
        keep = list(iter_bits(mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for w in iter_bits(self.adj[v] & mask):
                row |= 1 << pos[w]
            adj.append(row)
        labels = [self.labels[v] for v in keep] if self.labels is not None else None
        return Graph(len(keep), adj, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


@dataclass(frozen=True)
class Bipartition:
    side_x: int
    side_y: int


# -- named families ----------------------------------------------------

def empty_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    _check_order(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    _check_order(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    _check_order(n)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("both sides of K_{m,n} need at least one vertex")
    _check_order(m + n)
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}; the centre is vertex 0."""
    return complete_bipartite(1, n)


def complete_bipartite_minus_matching(n: int) -> Graph:
    """K_{n,n} - M with sides ``a_i = i`` and ``b_j = n + j``; ``a_i b_j`` is an edge iff i != j."""
    if n < 1 or 2 * n > MAX_ORDER:
        raise GraphError(f"K_(n,n)-M needs 1 <= n <= {MAX_ORDER // 2}")
    return Graph.from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


def cone(g: Graph) -> Graph:
    """Join a new universal vertex (index ``g.order``) to ``g``."""
    n = g.order
    if n + 1 > MAX_ORDER:
        raise GraphError("cone would exceed the order cap")
    adj = [row | (1 << n) for row in g.adj] + [(1 << n) - 1]
    labels = list(g.labels) + ["u"] if g.labels is not None else None
    return Graph(n + 1, adj, labels)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.order
    if n1 + g2.order > MAX_ORDER:
        raise GraphError("disjoint union would exceed the order cap")
    return Graph(n1 + g2.order, list(g1.adj) + [row << n1 for row in g2.adj])


def is_universal(g: Graph, v: int) -> bool:
    return g.adj[v] == g.vertex_mask & ~(1 << v)


def universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.order) if is_universal(g, v)]


def identify_universal_pair(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """Merge universal vertex ``u`` of ``g1`` with universal vertex ``v`` of ``g2``.

    The merged vertex keeps index ``u``; the other vertices of ``g2`` follow
    those of ``g1`` in their original order.
    """
    if not (0 <= u < g1.order and is_universal(g1, u)):
        raise GraphError(f"vertex {u} is not universal in the first graph")
    if not (0 <= v < g2.order and is_universal(g2, v)):
        raise GraphError(f"vertex {v} is not universal in the second graph")
    n1 = g1.order
    if n1 + g2.order - 1 > MAX_ORDER:
        raise GraphError("merged graph would exceed the order cap")
    rest = [w for w in range(g2.order) if w != v]
    new_index = {w: n1 + i for i, w in enumerate(rest)}
    new_index[v] = u
    edges = list(g1.edges())
    edges += [(new_index[a], new_index[b]) for a, b in g2.edges()]
    return Graph.from_edges(n1 + len(rest), edges)


def c4_plus() -> Graph:
    """C4 (vertices 0..3) with pendant ``i + 4`` hung on each cycle vertex ``i``."""
    return Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)])


def glued_cones(n: int) -> Graph:
    """cone(K_{2n,2n}-M) and cone(K_{6,6}-M) glued along their apexes.

    The shared apex has index ``4n``; the first cone's matching sides are
    ``0..2n-1`` and ``2n..4n-1``, the second's follow in the same layout.
    """
    if n < 1:
        raise GraphError("glued_cones needs n >= 1")
    if 4 * n + 13 > MAX_ORDER:
        raise GraphError(f"glued_cones({n}) has {4 * n + 13} vertices, above the order cap")
    g1 = cone(complete_bipartite_minus_matching(2 * n))
    g2 = cone(complete_bipartite_minus_matching(6))
    return identify_universal_pair(g1, 4 * n, g2, 12)


@dataclass(frozen=True)
class EdgeList:
    """A graph given only by its edges, for constructions beyond the order cap."""
    order: int
    edges: tuple[tuple[int, int], ...]
    hubs: tuple[int, ...] = ()

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.order, self.edges)


def triangle_of_cones(n: int) -> EdgeList:
    """Cones over K_{2n,2n}-M, K_{2n+2,2n+2}-M and K_{2n+2,2n+2}-M with the three apexes joined in a triangle.

    Blocks are laid out consecutively, each apex last in its block; ``hubs``
    lists the apexes.  The order is ``12n + 11``.
    """
    if n < 1:
        raise GraphError("triangle_of_cones needs n >= 1")
    edges: list[tuple[int, int]] = []
    hubs = []
    base = 0
    for half in (2 * n, 2 * n + 2, 2 * n + 2):
        apex = base + 2 * half
        edges += [(base + i, base + half + j) for i in range(half) for j in range(half) if i != j]
        edges += [(base + i, apex) for i in range(2 * half)]
        hubs.append(apex)
        base = apex + 1
    edges += [(hubs[0], hubs[1]), (hubs[1], hubs[2]), (hubs[0], hubs[2])]
    return EdgeList(base, tuple(edges), tuple(hubs))


FIG1_LABELS = ("a", "b", "c", "d", "e", "f", "g", "h", "x")
FIG1_EDGES = ("ab", "bc", "ca", "hg", "gf", "fh", "ag", "ch", "bd", "cd", "de", "ge", "fe", "fx", "dx", "ex")


def fig1_graph() -> Graph:
    """Nine-vertex graph a..h, x (indices 0..8) with chi_i = 3 whose x-deletion has chi_i = 4."""
    idx = {name: i for i, name in enumerate(FIG1_LABELS)}
    return Graph.from_edges(9, [(idx[e[0]], idx[e[1]]) for e in FIG1_EDGES], FIG1_LABELS)


def twisted_diamond() -> Graph:
    return delete_vertex(fig1_graph(), FIG1_LABELS.index("x"))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above ``v`` shift down by one."""
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range for order {g.order}")
    return g.induced(g.vertex_mask & ~(1 << v))


# -- structure ---------------------------------------------------------

def components(g: Graph) -> list[int]:
    """Connected components as bitsets, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.order):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    """True for graphs with exactly one component (the order-0 graph is not connected)."""
    return len(components(g)) == 1


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [math.inf] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adj[v]):
            if dist[w] == math.inf:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """Shortest-path length, ``math.inf`` across components."""
    return bfs_distances(g, u)[v]


def bipartition(g: Graph) -> Optional[Bipartition]:
    """A 2-colouring as ``Bipartition``; the smallest vertex of each component goes to ``side_x``."""
    side = [-1] * g.order
    for s in range(g.order):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in iter_bits(g.adj[v]):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    x = sum(1 << v for v in range(g.order) if side[v] == 0)
    return Bipartition(x, g.vertex_mask & ~x)


def has_bipartite_dominating_vertex(g: Graph) -> bool:
    """Connected bipartite ``g`` with a vertex adjacent to the whole opposite side.

    Disconnected graphs (and the order-0 graph) give ``False``.
    """
    if not is_connected(g):
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    for mine, other in ((parts.side_x, parts.side_y), (parts.side_y, parts.side_x)):
        for v in iter_bits(mine):
            if g.adj[v] & other == other:
                return True
    return False


def _colorable(g: Graph, k: int) -> bool:
    n = g.order
    classes = [0] * k
    colored = 0

    def pick() -> int:
        best, best_key = -1, None
        for v in iter_bits(g.vertex_mask & ~colored):
            sat = sum(1 for c in classes if c & g.adj[v])
            key = (sat, g.adj[v].bit_count())
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def rec(depth: int) -> bool:
        nonlocal colored
        if depth == n:
            return True
        v = pick()
        bit = 1 << v
        tried_empty = False
        for i in range(k):
            if classes[i] & g.adj[v]:
                continue
            if not classes[i]:
                if tried_empty:
                    continue
                tried_empty = True
            classes[i] |= bit
            colored |= bit
            if rec(depth + 1):
                return True
            classes[i] ^= bit
            colored ^= bit
        return False

    return rec(0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking over k-colourings."""
    if g.order == 0:
        return 0
    if g.num_edges == 0:
        return 1
    k = 2
    while not _colorable(g, k):
        k += 1
    return k
