"""graph6 codec and the plain edge-list reader.

The graph6 form is the header-free printable encoding used by the common
graph-corpus tools: one order field (one byte below 63 vertices, four bytes
up to 258047, eight above), then the upper triangle of the adjacency matrix
read column by column, packed six bits per byte with an offset of 63.
"""

from __future__ import annotations

from .graphs import Graph, build_graph

_MAX_N = (1 << 36) - 1


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` points at the offending byte."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _check_chars(s: str, start: int = 0) -> None:
    for i, ch in enumerate(s[start:], start):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 alphabet", i)


def encode_graph6(g: Graph) -> str:
    """Bit-exact graph6 string for g."""
    n = g.n
    if n > _MAX_N:
        raise Graph6Error(f"order {n} exceeds the graph6 maximum {_MAX_N}")
    if n <= 62:
        head = chr(63 + n)
    elif n <= 258047:
        head = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    chars = []
    for i in range(0, len(bits), 6):
        group = bits[i:i + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = (value << 1) | b
        chars.append(chr(63 + value))
    return head + "".join(chars)


def _decode_order(s: str) -> tuple[int, int]:
    """Return (n, index of the first adjacency byte)."""
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] == "~":
        raw, start = s[2:8], 8
        if len(raw) < 6:
            raise Graph6Error("truncated 8-byte order field", len(s))
    else:
        raw, start = s[1:4], 4
        if len(raw) < 3:
            raise Graph6Error("truncated 4-byte order field", len(s))
    n = 0
    for ch in raw:
        n = (n << 6) | (ord(ch) - 63)
    return n, start


def decode_graph6(s: str) -> Graph:
    """Inverse of :func:`encode_graph6` with precise error positions."""
    _check_chars(s)
    n, start = _decode_order(s)
    pair_count = n * (n - 1) // 2
    need = (pair_count + 5) // 6
    body = s[start:]
    if len(body) < need:
        raise Graph6Error(
            f"adjacency section too short: expected {need} bytes, got {len(body)}",
            len(s))
    if len(body) > need:
        raise Graph6Error("trailing data after the adjacency section", start + need)
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            ch = ord(body[idx // 6]) - 63
            if (ch >> (5 - idx % 6)) & 1:
                edges.append((row, col))
            idx += 1
    # padding bits beyond the triangle must be zero
    if pair_count and ord(body[-1]) - 63 & ((1 << (-pair_count % 6)) - 1):
        raise Graph6Error("nonzero padding bits", start + need - 1)
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the two-line-header edge-list format: ``n m`` then m ``u v`` lines."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("line 1: missing 'n m' header")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("line 1: header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError("line 1: header fields must be integers") from None
    edges = []
    for i in range(m):
        lineno = i + 2
        if lineno - 1 >= len(lines):
            raise ValueError(f"line {lineno}: expected {m} edges, file ended early")
        parts = lines[lineno - 1].split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"line {lineno}: edge ({u}, {v}) invalid for n={n}")
        edges.append((u, v))
    for extra_no, extra in enumerate(lines[m + 1:], m + 2):
        if extra.strip():
            raise ValueError(f"line {extra_no}: unexpected trailing content")
    return build_graph(n, edges)
