"""graph6 encoding for graphs of order at most 32 (single-byte size header)."""
from __future__ import annotations

from .graph import MAX_ORDER, Graph


class Graph6Error(ValueError):
    pass


_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    n = g.order
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for p in range(0, len(bits), 6):
        value = 0
        for b in bits[p:p + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 record")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range")
    if s[0] == "~":
        raise Graph6Error(f"order overflow: graphs above {MAX_ORDER} vertices are not supported")
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise Graph6Error(f"order overflow: {n} > {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for order {n}, got {len(body)}")
    values = [ord(ch) - 63 for ch in body]
    pad = len(values) * 6 - nbits
    if pad and values[-1] & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)
