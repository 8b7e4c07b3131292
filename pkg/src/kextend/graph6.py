"""graph6 encoding and decoding.

Layout: an order header N(n), then the upper triangle of the adjacency matrix
read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits
per byte, each byte offset by 63.  Trailing pad bits are zero.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"
DEFAULT_MAX_ORDER = 4096


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(G: Graph) -> str:
    bits = []
    for v in range(1, G.n):
        row = G.rows[v]
        bits.extend((row >> u) & 1 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i : i + 6]:
            chunk = chunk << 1 | b
        body.append(chr(chunk + 63))
    return _encode_order(G.n) + "".join(body)


def parse_graph6(text: str, max_order: int = DEFAULT_MAX_ORDER) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126", base + i)

    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated order header", base + len(vals))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated order header", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    if n > max_order:
        raise Graph6Error(f"order {n} exceeds configured maximum {max_order}", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - pos
    if have != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {have}", base + pos + min(have, need)
        )

    rows = [0] * n
    u, v = 0, 1
    for j in range(need):
        chunk = vals[pos + j]
        for shift in range(5, -1, -1):
            idx = j * 6 + (5 - shift)
            bit = chunk >> shift & 1
            if idx >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bit", base + pos + j)
                continue
            if bit:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, tuple(rows))
