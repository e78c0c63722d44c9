"""Isomorphism-free small-graph generation and graph6 stream ingestion."""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Union

from .canon import canonical_form
from .graph import Graph, is_connected
from .graph6 import Graph6Error, parse_graph6

log = logging.getLogger(__name__)

MAX_BUILTIN_ORDER = 7


class EnumerationError(ValueError):
    pass


@functools.lru_cache(maxsize=None)
def _all_graphs(n: int) -> dict[bytes, Graph]:
    """Canonical form -> representative, for every graph of order ``n``.

    Each graph of order ``n`` is a graph of order ``n - 1`` plus a vertex
    joined to some subset, so extending every class by every subset and
    deduplicating reaches every class exactly once.
    """
    if n == 0:
        return {canonical_form(Graph(0, [])): Graph(0, [])}
    out: dict[bytes, Graph] = {}
    for h in _all_graphs(n - 1).values():
        for nbrs in range(1 << (n - 1)):
            adj = [row | ((nbrs >> v & 1) << (n - 1)) for v, row in enumerate(h.adj)] + [nbrs]
            g = Graph(n, adj)
            key = canonical_form(g)
            if key not in out:
                out[key] = g
    return out


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class of order ``n`` (1 <= n <= 7), in canonical-form order.

    Each emitted graph is the canonical relabelling of its class.
    """
    if n < 1:
        raise EnumerationError("order must be at least 1")
    if n > MAX_BUILTIN_ORDER:
        raise EnumerationError(
            f"built-in generation stops at order {MAX_BUILTIN_ORDER}; supply a graph6 file for larger orders")
    classes = _all_graphs(n)
    for key in sorted(classes):
        g = parse_graph6(key.decode("ascii"))
        if connected_only and not is_connected(g):
            continue
        yield g


@dataclass
class StreamDiagnostics:
    errors: list[tuple[int, str]] = field(default_factory=list)


def read_graph6_stream(source: Union[str, IO[str], Iterable[str]], strict: bool = False,
                       diagnostics: StreamDiagnostics | None = None) -> Iterator[Graph]:
    """Parse newline-delimited graph6 records.

    ``source`` is a path, an open text file or any iterable of lines.  A
    malformed line is logged and recorded in ``diagnostics`` with its 1-based
    line number, or raised when ``strict``.  Blank lines are skipped.
    """
    if isinstance(source, str):
        with open(source, encoding="ascii") as fh:
            yield from read_graph6_stream(fh, strict, diagnostics)
        return
    for lineno, line in enumerate(source, 1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            log.warning("line %d: %s", lineno, exc)
            if diagnostics is not None:
                diagnostics.errors.append((lineno, str(exc)))
            continue
        yield g
