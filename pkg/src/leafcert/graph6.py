"""Bit-exact graph6 encoding and decoding.

Implements McKay's format: every byte is 63 + a 6-bit value, the order is
encoded in 1, 4 or 8 bytes, and the upper-triangle adjacency bits follow in
column-major order, zero-padded to a multiple of 6. The optional
">>graph6<<" header is accepted and stripped; sparse6 and digraph6 inputs
are rejected.
"""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; messages name the offending byte offset."""


def _decode_size(s: str) -> tuple[int, int]:
    """Return (order, number of size bytes consumed)."""
    c0 = ord(s[0])
    if c0 != 126:
        return c0 - 63, 1
    if len(s) >= 2 and ord(s[1]) == 126:
        if len(s) < 8:
            raise Graph6Error(f"truncated 8-byte size field at byte offset {len(s)}")
        n = 0
        for off in range(2, 8):
            n = (n << 6) | (ord(s[off]) - 63)
        if n < 258048:
            raise Graph6Error("non-canonical 8-byte size encoding at byte offset 0")
        return n, 8
    if len(s) < 4:
        raise Graph6Error(f"truncated 4-byte size field at byte offset {len(s)}")
    n = 0
    for off in range(1, 4):
        n = (n << 6) | (ord(s[off]) - 63)
    if not 63 <= n <= 258047:
        raise Graph6Error("non-canonical 4-byte size encoding at byte offset 0")
    return n, 4


def from_graph6(line: str) -> Graph:
    """Parse one graph6 line (optionally ">>graph6<<"-prefixed) into a Graph."""
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string at byte offset 0")
    if s[0] == ":":
        raise Graph6Error("sparse6 input rejected at byte offset 0")
    if s[0] == "&":
        raise Graph6Error("digraph6 input rejected at byte offset 0")
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(
                f"character {ch!r} out of printable range 63-126 at byte offset {off}"
            )
    n, size_len = _decode_size(s)
    if n == 0:
        raise Graph6Error("order 0 graph rejected at byte offset 0")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    expected = size_len + nbytes
    if len(s) < expected:
        raise Graph6Error(
            f"truncated edge data: expected {expected} bytes, ran out at byte offset {len(s)}"
        )
    if len(s) > expected:
        raise Graph6Error(f"trailing data at byte offset {expected}")

    rows = [0] * n
    bit_index = 0
    # Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for byte_off in range(size_len, expected):
        value = ord(s[byte_off]) - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if bit_index < nbits:
                if bit:
                    i, j = next(pairs)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                else:
                    next(pairs)
            elif bit:
                raise Graph6Error(f"nonzero padding bits at byte offset {byte_off}")
            bit_index += 1
    return Graph(n, tuple(rows))


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return chr(126) + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) * 2 + "".join(
            chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0)
        )
    raise ValueError(f"order {n} exceeds the graph6 format limit")


def to_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of ``g`` (round-trips exactly)."""
    out = [_encode_size(g.n)]
    value = 0
    filled = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            value = value << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + value))
                value = 0
                filled = 0
    if filled:
        out.append(chr(63 + (value << (6 - filled))))
    return "".join(out)
