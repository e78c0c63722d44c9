"""Command line front end: solve, critical, enumerate, verify."""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from typing import Optional, Sequence

from .cache import ResultCache
from .claims import FAIL, REGISTRY, ClaimError, report_document, run_all, run_claim
from .criticality import InvariantId, MemoryCache, delta_profile, invariant_value
from .dsl import DSLError, parse_graph_spec
from .enumeration import EnumerationError, enumerate_graphs, read_graph6_stream
from .graph import GraphError, is_connected
from .graph6 import Graph6Error, emit_graph6
from .table import BudgetExceeded, SolveStats

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3

INVARIANTS = [inv.value for inv in InvariantId]


def _cache(path: Optional[str]):
    return ResultCache(path) if path else MemoryCache()


def _graph(text: str):
    try:
        return parse_graph_spec(text)
    except (DSLError, Graph6Error, GraphError) as exc:
        raise SystemExit(_usage_error(f"cannot parse graph {text!r}: {exc}"))


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def cmd_solve(args) -> int:
    g = _graph(args.graph)
    stats = SolveStats()
    try:
        value = invariant_value(g, args.invariant, budget=args.budget, stats=stats, cache=_cache(args.cache))
    except BudgetExceeded as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    if args.json:
        print(json.dumps({"graph": emit_graph6(g), "invariant": args.invariant, "value": value,
                          "stats": {"expanded": stats.expanded, "memo_hits": stats.hits}}))
    else:
        print(value)
    return 0


def cmd_critical(args) -> int:
    g = _graph(args.graph)
    if g.order < 1:
        return _usage_error("graph has no vertices")
    try:
        prof = delta_profile(g, args.invariant, budget=args.budget, cache=_cache(args.cache))
    except BudgetExceeded as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    if args.json:
        print(json.dumps({"graph": emit_graph6(g)} | prof.to_dict()))
        return 0
    print(f"{prof.critical_class.value} k={prof.base_value}")
    for d in prof.per_vertex:
        print(f"  {d.label}\t{d.value}\t{d.delta:+d}")
    return 0


def cmd_enumerate(args) -> int:
    try:
        if args.input:
            graphs = (g for g in read_graph6_stream(args.input)
                      if (args.order is None or g.order == args.order) and (not args.connected or is_connected(g)))
        else:
            if args.order is None:
                return _usage_error("--order is required without --input")
            graphs = enumerate_graphs(args.order, connected_only=args.connected)
        out = [emit_graph6(g) for g in graphs]
    except (EnumerationError, OSError) as exc:
        return _usage_error(str(exc))
    if args.json:
        print(json.dumps({"order": args.order, "connected": args.connected, "count": len(out), "graphs": out}))
    else:
        print("\n".join(out))
    return 0


def _parse_params(items: Sequence[str]) -> dict:
    params = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep:
            raise ClaimError(f"parameter {item!r} is not key=value")
        try:
            params[key] = int(raw)
        except ValueError:
            params[key] = raw
    return params


def _write_csv(directory: str, reports) -> None:
    os.makedirs(directory, exist_ok=True)
    for r in reports:
        if not r.table:
            continue
        path = os.path.join(directory, f"{r.claim_id}.csv")
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(r.table[0]))
            writer.writeheader()
            writer.writerows(r.table)


def cmd_verify(args) -> int:
    cache = _cache(args.cache)
    try:
        params = _parse_params(args.param)
        if args.claim:
            if params and len(args.claim) != 1:
                raise ClaimError("--param needs exactly one --claim")
            reports = [run_claim(cid, params or None, cache=cache, budget=args.budget,
                                 allow_stretch=args.allow_stretch, profile=args.profile) for cid in args.claim]
        else:
            if params:
                raise ClaimError("--param needs --claim")
            reports = run_all(args.profile, cache=cache, budget=args.budget, allow_stretch=args.allow_stretch)
    except ClaimError as exc:
        return _usage_error(str(exc))
    doc = report_document(reports, args.profile)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
    if args.csv:
        _write_csv(args.csv, reports)
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            extra = f" ({r.note})" if r.note else ""
            print(f"{r.claim_id:<12} {r.status:<9} {r.wall_time:7.1f}s  {r.checked}{extra}")
    return EXIT_FAIL if any(r.status == FAIL for r in reports) else 0


def cmd_claims(args) -> int:
    for cid, spec in REGISTRY.items():
        tag = " [stretch]" if spec.stretch else ""
        print(f"{cid}{tag}: {spec.statement} defaults={spec.defaults}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gamecrit", description="Exact solvers for graph colouring games.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("--invariant", choices=INVARIANTS, required=True)
            p.add_argument("--graph", required=True, help="DSL expression or graph6 string")
        p.add_argument("--json", action="store_true")
        p.add_argument("--cache", help="append-only result cache file")
        p.add_argument("--budget", type=int, help="state budget per solve")

    p = sub.add_parser("solve", help="value of one invariant")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("critical", help="vertex-deletion profile and class")
    common(p)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("enumerate", help="list graphs in graph6")
    p.add_argument("--order", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--input", help="graph6 file to filter instead of generating")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run registered claims")
    common(p, graph=False)
    p.add_argument("--profile", choices=["quick", "full"], default="quick")
    p.add_argument("--claim", action="append", default=[], help="claim id; repeatable")
    p.add_argument("--param", action="append", default=[], help="key=value override for a single claim")
    p.add_argument("--allow-stretch", action="store_true")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--csv", help="directory for census CSV tables")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("claims", help="list registered claims")
    p.set_defaults(func=cmd_claims)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    if getattr(args, "budget", None) is not None and args.budget < 1:
        return _usage_error("--budget must be positive")
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
