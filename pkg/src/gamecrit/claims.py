"""Registry of checkable statements about the four game invariants.

Each claim couples a mathematical statement with a runner that decides it
by exact solving, either on a named family member or over a census of small
graphs.  A census only covers the orders it enumerates, and every report
states that range.
"""
from __future__ import annotations

import itertools
import json
import logging
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable, Iterator, Optional

from . import graph as gr
from .canon import canonical_form
from .coloring_game import alice_wins
from .criticality import (CriticalClass, Flavor, InvariantId, MemoryCache, ValueCache,
                          delta_profile, invariant_value, is_k_critical)
from .enumeration import MAX_BUILTIN_ORDER, enumerate_graphs, read_graph6_stream
from .graph import Graph, GraphError
from .graph6 import emit_graph6
from .independence_game import Variant, game_value
from .indicated_game import order_wins
from .table import BudgetExceeded, SolveStats

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1

PASS, FAIL, UNDECIDED = "Pass", "Fail", "Undecided"


class ClaimError(ValueError):
    """Unknown claim, bad parameters, or a stretch claim run without permission."""


@dataclass
class ClaimReport:
    claim_id: str
    status: str
    parameters: dict[str, Any]
    evidence: list[dict[str, Any]]
    checked: str
    wall_time: float = 0.0
    stats: SolveStats = field(default_factory=SolveStats)
    note: str = ""
    table: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "status": self.status,
            "parameters": self.parameters,
            "checked": self.checked,
            "evidence": self.evidence,
            "note": self.note,
            "wall_time": round(self.wall_time, 3),
            "stats": {"expanded": self.stats.expanded, "memo_hits": self.stats.hits},
            "census_rows": len(self.table),
        }


@dataclass
class Context:
    cache: ValueCache
    budget: Optional[int]
    stats: SolveStats

    def value(self, g: Graph, inv: InvariantId) -> int:
        return invariant_value(g, inv, budget=self.budget, stats=self.stats, cache=self.cache)

    def profile(self, g: Graph, inv: InvariantId):
        return delta_profile(g, inv, budget=self.budget, stats=self.stats, cache=self.cache)

    def critical(self, g: Graph, inv: InvariantId, k: int, flavor: Flavor) -> bool:
        return is_k_critical(g, inv, k, flavor, budget=self.budget, stats=self.stats, cache=self.cache)


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    statement: str
    runner: Callable[[Context, dict], tuple[bool, list[dict], str, list[dict]]]
    defaults: dict[str, Any] = field(default_factory=dict)
    quick: Optional[dict[str, Any]] = None  # None: not part of the quick profile
    stretch: bool = False
    budget_hint: str = "default"


# -- helpers -----------------------------------------------------------

def _named() -> dict[bytes, str]:
    table = {
        "K2": gr.complete(2), "C3": gr.cycle(3), "P4": gr.path(4), "C4": gr.cycle(4),
        "C5": gr.cycle(5), "P6": gr.path(6), "C7": gr.cycle(7), "KmM3": gr.complete_bipartite_minus_matching(3),
        "C4plus": gr.c4_plus(),
    }
    return {canonical_form(g): name for name, g in table.items()}


_NAMES: dict[bytes, str] = {}


def describe(g: Graph) -> str:
    """DSL name for the few graphs that have one, graph6 otherwise."""
    if not _NAMES:
        _NAMES.update(_named())
    return _NAMES.get(canonical_form(g), emit_graph6(g))


def packaged_graph6(name: str) -> str:
    return str(resources.files("gamecrit") / "data" / name)


def census(max_order: int, connected: bool, graph6_input: Optional[str] = None,
           min_order: int = 1) -> Iterator[Graph]:
    """Every graph (or connected graph) of order min_order..max_order.

    Orders above the built-in generator come from ``graph6_input``.
    """
    for n in range(min_order, min(max_order, MAX_BUILTIN_ORDER) + 1):
        yield from enumerate_graphs(n, connected_only=connected)
    if max_order > MAX_BUILTIN_ORDER:
        if graph6_input is None:
            raise ClaimError(f"census above order {MAX_BUILTIN_ORDER} needs a graph6 input file")
        seen = set()
        for g in read_graph6_stream(graph6_input):
            if not MAX_BUILTIN_ORDER < g.order <= max_order:
                continue
            if connected and not gr.is_connected(g):
                continue
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                yield g


def _range(max_order: int, connected: bool, extra: str = "") -> str:
    kind = "connected graphs" if connected else "graphs"
    return f"all {kind} of order 1..{max_order}{extra}"


def _graph_evidence(g: Graph, **values) -> dict[str, Any]:
    return {"graph": describe(g), "order": g.order, **values}


def _sorted(evidence: list[dict]) -> list[dict]:
    return sorted(evidence, key=lambda e: json.dumps(e, sort_keys=True))


def _profile_evidence(g: Graph, prof) -> dict[str, Any]:
    return _graph_evidence(g, value=prof.base_value, critical_class=prof.critical_class.value,
                           deleted=sorted({d.value for d in prof.per_vertex}),
                           deltas=sorted({d.delta for d in prof.per_vertex}))


def _positive(params: dict, *names: str) -> None:
    for name in names:
        if not isinstance(params[name], int) or params[name] < 1:
            raise ClaimError(f"parameter {name} must be a positive integer")


# -- runners -----------------------------------------------------------

def _small_chi_g(ctx: Context, p: dict):
    _positive(p, "max_star")
    cases = [("K2", gr.complete(2), 2), ("P4", gr.path(4), 3), ("C3", gr.cycle(3), 3), ("C4", gr.cycle(4), 3)]
    cases += [(f"K1,{n}", gr.star(n), 2) for n in range(1, p["max_star"] + 1)]
    ok, ev = True, []
    for name, g, want in cases:
        got = ctx.value(g, InvariantId.CHI_G)
        ok &= got == want
        ev.append({"graph": name, "expected": want, "value": got})
    return ok, ev, f"{len(cases)} named graphs", []


def _disconnected_chi_g(ctx: Context, p: dict):
    k = p["k"]
    if not isinstance(k, int) or k < 4:
        raise ClaimError("k must be an integer >= 4")
    h = gr.complete_bipartite_minus_matching(k)
    g = gr.disjoint_union(h, h)
    prof = ctx.profile(g, InvariantId.CHI_G)
    ok = prof.base_value == k and all(d.value == 3 for d in prof.per_vertex)
    ev = [_profile_evidence(g, prof)]
    # the explicit opening: colour 1 on the matching partner of the deleted vertex
    x, y = 0, k
    opening_ok = alice_wins(gr.delete_vertex(g, x), 3, first_move=(y - 1, 1), budget=ctx.budget, stats=ctx.stats)
    ok &= opening_ok
    ev.append({"graph": f"union(KmM{k},KmM{k}) minus a_1", "opening": "b_1 gets colour 1", "alice_wins_with_3": opening_ok})
    return ok, ev, f"k={k}", []


def _lower_gap(ctx: Context, p: dict):
    _positive(p, "n")
    n = p["n"]
    g = gr.complete_bipartite_minus_matching(n + 3)
    prof = ctx.profile(g, InvariantId.CHI_G)
    ok = prof.base_value == n + 3 and all(d.value == 3 for d in prof.per_vertex)
    ok &= prof.critical_class is CriticalClass.LOWER and set(prof.deltas) == {n}
    return ok, [_profile_evidence(g, prof)], f"n={n}", []


def _cone_gap(ctx: Context, p: dict):
    _positive(p, "n")
    n = p["n"]
    g = gr.cone(gr.complete_bipartite_minus_matching(n + 3))
    u = g.order - 1
    prof = ctx.profile(g, InvariantId.CHI_G)
    ok = prof.base_value == 3 and prof.per_vertex[u].value == n + 3
    ok &= all(d.value == 4 for d in prof.per_vertex if d.vertex != u)
    ok &= set(prof.deltas) == {-1, -n} and prof.critical_class is CriticalClass.UPPER
    ev = [_profile_evidence(g, prof) | {"apex_deleted": prof.per_vertex[u].value}]
    return ok, ev, f"n={n}", []


def _two_critical(invariants: tuple[InvariantId, ...], connected: bool):
    def run(ctx: Context, p: dict):
        _positive(p, "order")
        found: dict[str, set[str]] = {inv.value: set() for inv in invariants}
        rows = []
        for g in census(p["order"], connected):
            row = {"graph6": emit_graph6(g), "order": g.order, "edges": g.num_edges}
            for inv in invariants:
                hit = ctx.critical(g, inv, 2, Flavor.ANY)
                row[inv.value] = hit
                if hit:
                    found[inv.value].add(describe(g))
            rows.append(row)
        ok = all(names == {"K2"} for names in found.values())
        ev = [{"invariant": inv, "two_critical": sorted(names)} for inv, names in found.items()]
        return ok, ev, _range(p["order"], connected), rows
    return run


def _three_lower(invariants: tuple[InvariantId, ...], connected: bool, expected: dict[str, int],
                 default_input: Optional[str] = None):
    """Census of 3-lower-critical graphs against a list of (name -> order)."""
    def run(ctx: Context, p: dict):
        _positive(p, "order")
        source = p.get("input") or (packaged_graph6(default_input) if default_input else None)
        want = {name for name, n in expected.items() if n <= p["order"]}
        found: dict[str, set[str]] = {inv.value: set() for inv in invariants}
        rows = []
        for g in census(p["order"], connected, source):
            row = {"graph6": emit_graph6(g), "order": g.order, "edges": g.num_edges}
            for inv in invariants:
                hit = ctx.critical(g, inv, 3, Flavor.LOWER)
                row[inv.value] = hit
                if hit:
                    found[inv.value].add(describe(g))
            rows.append(row)
        ok = all(names == want for names in found.values())
        ev = [{"invariant": inv, "found": sorted(names), "expected": sorted(want)} for inv, names in found.items()]
        extra = " (orders above 7 read from graph6 input)" if p["order"] > MAX_BUILTIN_ORDER else ""
        return ok, ev, _range(p["order"], connected, extra), rows
    return run


def _union_max(ctx: Context, p: dict):
    _positive(p, "order")
    graphs = list(census(p["order"], True))
    bad, rows = [], []
    for g1, g2 in itertools.combinations_with_replacement(graphs, 2):
        if g1.order + g2.order > gr.MAX_ORDER:
            continue
        a, b = ctx.value(g1, InvariantId.CHI_I), ctx.value(g2, InvariantId.CHI_I)
        u = ctx.value(gr.disjoint_union(g1, g2), InvariantId.CHI_I)
        rows.append({"first": emit_graph6(g1), "second": emit_graph6(g2), "chi_i_1": a, "chi_i_2": b, "chi_i_union": u})
        if u != max(a, b):
            bad.append({"graphs": [describe(g1), describe(g2)], "values": [a, b], "union": u})
    ev = _sorted(bad) or [{"pairs_checked": len(rows)}]
    return not bad, ev, f"all unordered pairs of connected graphs of order 1..{p['order']}", rows


def _chi_i_lower_profiles(ctx: Context, max_order: int):
    """(graph, profile) for every graph of order >= 2 whose chi_i profile is LowerCritical."""
    out = []
    for g in census(max_order, False, min_order=2):
        prof = ctx.profile(g, InvariantId.CHI_I)
        if prof.critical_class is CriticalClass.LOWER:
            out.append((g, prof))
    return out


def _lower_connected(ctx: Context, p: dict):
    _positive(p, "order")
    hits = _chi_i_lower_profiles(ctx, p["order"])
    bad = [_profile_evidence(g, prof) for g, prof in hits if not gr.is_connected(g)]
    rows = [{"graph6": emit_graph6(g), "connected": gr.is_connected(g), "value": prof.base_value} for g, prof in hits]
    ev = _sorted(bad) or [{"lower_critical_found": len(hits), "all_connected": True}]
    return not bad, ev, _range(p["order"], False), rows


def _odd_cycles(ctx: Context, p: dict):
    _positive(p, "order")
    found = {describe(g) for g, prof in _chi_i_lower_profiles(ctx, p["order"]) if prof.base_value == 3}
    want = {f"C{n}" for n in range(3, p["order"] + 1, 2)}
    return found == want, [{"found": sorted(found), "expected": sorted(want)}], _range(p["order"], False), []


def _degree_bound(ctx: Context, p: dict):
    _positive(p, "order")
    hits = _chi_i_lower_profiles(ctx, p["order"])
    bad = []
    for g, prof in hits:
        for d in prof.per_vertex:
            if g.degree(d.vertex) < d.value:
                bad.append(_graph_evidence(g, vertex=d.vertex, degree=g.degree(d.vertex), deleted_value=d.value))
    ev = _sorted(bad) or [{"lower_critical_checked": len(hits)}]
    return not bad, ev, _range(p["order"], False), []


def _four_lower(ctx: Context, p: dict):
    _positive(p, "order")
    hits = [(g, prof) for g, prof in _chi_i_lower_profiles(ctx, p["order"]) if prof.base_value == 4]
    bad = [_profile_evidence(g, prof) | {"min_degree": g.min_degree} for g, prof in hits
           if any(d.value != 3 for d in prof.per_vertex) or g.min_degree < 3]
    ev = _sorted(bad) or [{"four_lower_critical_found": sorted(describe(g) for g, _ in hits)}]
    return not bad, ev, _range(p["order"], False), []


def _union_c6_p6(ctx: Context, p: dict):
    g = gr.disjoint_union(gr.cycle(6), gr.path(6))
    ok, ev = True, []
    for inv in (InvariantId.CHI_IG_A, InvariantId.CHI_IG_AB):
        prof = ctx.profile(g, inv)
        ok &= prof.base_value == 3 and all(d.value == 2 for d in prof.per_vertex)
        ev.append(_profile_evidence(g, prof) | {"invariant": inv.value, "graph": "union(C6,P6)"})
    return ok, ev, "C6 + P6", []


def _indep_lower_gap(ctx: Context, p: dict):
    _positive(p, "max_n")
    ok, ev = True, []
    for n in range(1, p["max_n"] + 1):
        g = gr.complete_bipartite_minus_matching(n + 2)
        for inv in (InvariantId.CHI_IG_A, InvariantId.CHI_IG_AB):
            prof = ctx.profile(g, inv)
            ok &= prof.base_value == n + 2 and all(d.value == 2 for d in prof.per_vertex)
            ev.append(_profile_evidence(g, prof) | {"invariant": inv.value, "graph": f"KmM{n + 2}", "n": n})
    return ok, ev, f"n=1..{p['max_n']}", []


def _glued_cones(ctx: Context, p: dict):
    n = p["n"]
    if not isinstance(n, int) or n < 2:
        raise ClaimError("n must be an integer >= 2")
    g = gr.glued_cones(n)
    u = 4 * n
    prof = ctx.profile(g, InvariantId.CHI_IG_AB)
    expected = {v: (2 * n if v == u else 4) for v in range(g.order)}
    wrong = [d for d in prof.per_vertex if d.value != expected[d.vertex]]
    ok = prof.base_value == 3 and not wrong
    ev = [_profile_evidence(g, prof) | {"expected_value": 3, "expected_deltas": sorted({-1, 3 - 2 * n})}]
    for d in wrong[:4]:
        ev.append({"graph": emit_graph6(gr.delete_vertex(g, d.vertex)), "deleted_vertex": d.vertex,
                   "apex": d.vertex == u, "value": d.value, "expected": expected[d.vertex]})
    return ok, ev, f"n={n}", []


def _triangle_of_cones(ctx: Context, p: dict):
    n = p["n"]
    if not isinstance(n, int) or n < 2:
        raise ClaimError("n must be an integer >= 2")
    c = gr.triangle_of_cones(n)
    ev = [{"order": c.order, "edges": len(c.edges), "hubs": list(c.hubs),
           "expected_value": 4, "expected_deltas": sorted({1, -2 * n + 3, -2 * n + 1})}]
    if c.order > gr.MAX_ORDER:
        raise _Undecided(f"construction has {c.order} vertices, above the order cap {gr.MAX_ORDER}", ev)
    g = c.to_graph()
    prof = ctx.profile(g, InvariantId.CHI_IG_AB)
    ok = prof.base_value == 4 and set(prof.deltas) == {1, -2 * n + 3, -2 * n + 1}
    return ok, ev + [_profile_evidence(g, prof)], f"n={n}", []


def _bipartite_dominating(ctx: Context, p: dict):
    _positive(p, "order")
    bad, rows = [], []
    for g in census(p["order"], True, min_order=2):
        a = ctx.value(g, InvariantId.CHI_IG_A)
        ab = ctx.value(g, InvariantId.CHI_IG_AB)
        dom = gr.has_bipartite_dominating_vertex(g)
        rows.append({"graph6": emit_graph6(g), "chi_ig_a": a, "chi_ig_ab": ab, "dominating": dom})
        if not (a == 2) == (ab == 2) == dom:
            bad.append(_graph_evidence(g, chi_ig_a=a, chi_ig_ab=ab, dominating=dom))
    ev = _sorted(bad) or [{"graphs_checked": len(rows), "value_two": sum(r["dominating"] for r in rows)}]
    return not bad, ev, _range(p["order"], True, " with at least one edge"), rows


def _far_opening(ctx: Context, p: dict):
    _positive(p, "order")
    bad, checked = [], 0
    for g in census(p["order"], True):
        for u in range(g.order):
            if max(gr.bfs_distances(g, u)) < 3:
                continue
            for variant in Variant:
                checked += 1
                v = game_value(g, variant, first_move=u, budget=ctx.budget, stats=ctx.stats)
                if v < 3:
                    bad.append(_graph_evidence(g, opening=u, variant=variant.value, value=v))
    ev = _sorted(bad) or [{"openings_checked": checked}]
    return not bad, ev, _range(p["order"], True), []


def _fig1(ctx: Context, p: dict):
    g = gr.fig1_graph()
    x = gr.FIG1_LABELS.index("x")
    base = ctx.value(g, InvariantId.CHI_I)
    minus = ctx.value(gr.delete_vertex(g, x), InvariantId.CHI_I)
    order = [gr.FIG1_LABELS.index(c) for c in "fegh" + "x" + "dcba"]
    fixed = order_wins(g, 3, order)
    ev = [{"graph": "fig1", "value": base, "expected": 3},
          {"graph": "fig1 minus x", "value": minus, "expected": 4},
          {"selection_order": "f,e,g,h,x,d,c,b,a", "wins_with_3": fixed}]
    return base == 3 and minus == 4 and fixed, ev, "fig1 and its x-deletion", []


class _Undecided(Exception):
    def __init__(self, note: str, evidence: list[dict]):
        super().__init__(note)
        self.note = note
        self.evidence = evidence


# -- registry ----------------------------------------------------------

_CHI_IG = (InvariantId.CHI_IG_A, InvariantId.CHI_IG_AB)

REGISTRY: dict[str, ClaimSpec] = {spec.claim_id: spec for spec in [
    ClaimSpec("chi-g-small", "chi_g is 2 on K2 and on every star K_{1,n}, and 3 on P4, C3 and C4.",
              _small_chi_g, {"max_star": 5}, quick={}),
    ClaimSpec("prop-3.1", "For k >= 4 two disjoint copies of K_{k,k}-M have chi_g = k while every vertex deletion "
              "has chi_g = 3; Alice wins the deletion with 3 colours by first colouring the matching partner "
              "of the deleted vertex.", _disconnected_chi_g, {"k": 4}, budget_hint="about 3M states at k=4"),
    ClaimSpec("prop-3.2", "K_{n+3,n+3}-M has chi_g = n+3 and each vertex deletion has chi_g = 3, so it is "
              "lower critical with every gap equal to n.", _lower_gap, {"n": 1}, quick={}),
    ClaimSpec("prop-3.3", "The cone over K_{n+3,n+3}-M has chi_g = 3; deleting the apex gives n+3 and deleting any "
              "other vertex gives 4, so the graph is upper critical with gap set {-1,-n}.", _cone_gap, {"n": 1}),
    ClaimSpec("prop-3.4", "K2 is the only graph with chi_g = 2 whose vertex deletions all change chi_g.",
              _two_critical((InvariantId.CHI_G,), False), {"order": 6}, quick={"order": 5}),
    ClaimSpec("thm-3.5", "A connected graph has chi_g = 3 and every vertex deletion lowers chi_g exactly when it is "
              "P4, C3 or C4.", _three_lower((InvariantId.CHI_G,), True, {"C3": 3, "P4": 4, "C4": 4}),
              {"order": 7}, quick={"order": 6}),
    ClaimSpec("lemma-4.1", "chi_i of a disjoint union equals the maximum of chi_i over the parts.",
              _union_max, {"order": 5}, quick={"order": 4}),
    ClaimSpec("prop-4.2", "Every graph whose vertex deletions all lower chi_i is connected.",
              _lower_connected, {"order": 7}, quick={"order": 6}),
    ClaimSpec("prop-4.3", "K2 is the only graph with chi_i = 2 whose vertex deletions all change chi_i.",
              _two_critical((InvariantId.CHI_I,), False), {"order": 6}, quick={"order": 5}),
    ClaimSpec("thm-4.4", "A graph has chi_i = 3 and every vertex deletion lowers chi_i exactly when it is an odd cycle.",
              _odd_cycles, {"order": 7}, quick={"order": 6}),
    ClaimSpec("prop-4.5", "If every vertex deletion lowers chi_i then d(x) >= chi_i(G-x) for each vertex x.",
              _degree_bound, {"order": 7}, quick={"order": 6}),
    ClaimSpec("thm-4.6", "If chi_i = 4 and every vertex deletion lowers chi_i, then each deletion has chi_i = 3 "
              "and the minimum degree is at least 3.", _four_lower, {"order": 7}, quick={"order": 6}),
    ClaimSpec("prop-5.1", "C6 + P6 has chi_ig = 3 in both variants and every vertex deletion has chi_ig = 2.",
              _union_c6_p6, {}, quick={}),
    ClaimSpec("prop-5.2", "K_{n+2,n+2}-M has chi_ig = n+2 in both variants and each vertex deletion has chi_ig = 2.",
              _indep_lower_gap, {"max_n": 2}, quick={}),
    ClaimSpec("prop-5.3", "Gluing the cones over K_{2n,2n}-M and K_{6,6}-M at their apexes gives AB-value 3, the apex "
              "deletion has AB-value 2n and every other deletion has AB-value 4.", _glued_cones, {"n": 2},
              stretch=True, budget_hint="about 0.5M states at n=2, 5M at n=3"),
    ClaimSpec("prop-5.4", "Three cones over K_{2n,2n}-M, K_{2n+2,2n+2}-M, K_{2n+2,2n+2}-M with pairwise joined "
              "apexes have AB-value 4 and AB deletion gaps {1, 3-2n, 1-2n}.", _triangle_of_cones, {"n": 2},
              stretch=True, budget_hint="not representable below 33 vertices"),
    ClaimSpec("thm-5.5", "For a connected graph with an edge, chi_ig^A = 2 iff chi_ig^AB = 2 iff the graph is bipartite "
              "with a vertex adjacent to the whole opposite side.", _bipartite_dominating, {"order": 7},
              quick={"order": 6}),
    ClaimSpec("prop-5.6", "Among connected graphs, K2 is the only one with chi_ig = 2 whose vertex deletions all change "
              "chi_ig, in either variant.", _two_critical(_CHI_IG, True), {"order": 6}, quick={"order": 6}),
    ClaimSpec("lemma-5.7", "In a connected graph, if Alice opens on u and some vertex lies at distance >= 3 from u, "
              "the game lasts at least three rounds in either variant.", _far_opening, {"order": 7},
              quick={"order": 6}),
    ClaimSpec("thm-5.8", "A connected graph has chi_ig = 3 and every vertex deletion lowers it exactly when it is C3, "
              "C5, P6, K_{3,3}-M or C4 with a pendant at each cycle vertex; same list for both variants.",
              _three_lower(_CHI_IG, True, {"C3": 3, "C5": 5, "P6": 6, "KmM3": 6, "C4plus": 8}, "connected8.g6"),
              {"order": 8, "input": None}, quick={"order": 6}),
    ClaimSpec("fig-1", "The nine-vertex graph fig1 has chi_i = 3, its x-deletion has chi_i = 4, and Ann wins with 3 "
              "colours selecting f,e,g,h,x,d,c,b,a.", _fig1, {}, quick={}),
]}


def claim_ids(profile: str = "full", allow_stretch: bool = False) -> list[str]:
    if profile not in ("quick", "full"):
        raise ClaimError(f"unknown profile {profile!r}")
    out = []
    for cid, spec in REGISTRY.items():
        if spec.stretch:
            if allow_stretch:
                out.append(cid)
        elif profile == "full" or spec.quick is not None:
            out.append(cid)
    return out


def _params(spec: ClaimSpec, overrides: Optional[dict], profile: str) -> dict:
    params = dict(spec.defaults)
    if profile == "quick" and spec.quick is not None:
        params.update(spec.quick)
    for key, value in (overrides or {}).items():
        if key not in spec.defaults:
            raise ClaimError(f"claim {spec.claim_id} has no parameter {key!r}")
        params[key] = value
    return params


def run_claim(claim_id: str, params: Optional[dict] = None, *, cache: Optional[ValueCache] = None,
              budget: Optional[int] = None, allow_stretch: bool = False, profile: str = "full") -> ClaimReport:
    """Decide one claim.  ``budget`` caps the states of each individual solve."""
    spec = REGISTRY.get(claim_id)
    if spec is None:
        raise ClaimError(f"unknown claim {claim_id!r}; known: {', '.join(REGISTRY)}")
    params = _params(spec, params, profile)
    if spec.stretch and not allow_stretch:
        raise ClaimError(f"{claim_id} is a stretch claim; enable it explicitly")
    if claim_id == "prop-3.1" and params["k"] > 4 and not allow_stretch:
        raise ClaimError("prop-3.1 beyond k=4 is a stretch check; enable it explicitly")
    ctx = Context(cache if cache is not None else MemoryCache(), budget, SolveStats())
    start = time.perf_counter()
    try:
        ok, evidence, checked, table = spec.runner(ctx, params)
        report = ClaimReport(claim_id, PASS if ok else FAIL, params, _sorted(evidence), checked, table=table)
    except BudgetExceeded as exc:
        report = ClaimReport(claim_id, UNDECIDED, params, [], "incomplete", note=f"budget of {exc.budget} states exceeded")
    except _Undecided as exc:
        report = ClaimReport(claim_id, UNDECIDED, params, exc.evidence, "none", note=exc.note)
    report.wall_time = time.perf_counter() - start
    report.stats = ctx.stats
    log.info("%s: %s (%.1fs)", claim_id, report.status, report.wall_time)
    return report


def run_all(profile: str = "quick", *, cache: Optional[ValueCache] = None, budget: Optional[int] = None,
            allow_stretch: bool = False, only: Optional[list[str]] = None) -> list[ClaimReport]:
    """Run every claim of ``profile`` sharing one value cache; failures are reported, not raised."""
    cache = cache if cache is not None else MemoryCache()
    ids = claim_ids(profile, allow_stretch)
    if only:
        unknown = set(only) - set(REGISTRY)
        if unknown:
            raise ClaimError(f"unknown claims: {', '.join(sorted(unknown))}")
        ids = [cid for cid in only]
    return [run_claim(cid, cache=cache, budget=budget, allow_stretch=allow_stretch, profile=profile) for cid in ids]


def report_document(reports: list[ClaimReport], profile: str) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "profile": profile,
        "summary": {s: sum(r.status == s for r in reports) for s in (PASS, FAIL, UNDECIDED)},
        "claims": [r.to_dict() for r in reports],
    }
