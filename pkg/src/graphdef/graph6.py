"""graph6 encoding (bit-exact with nauty's format description)."""

from __future__ import annotations

from .errors import GraphInputError
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise GraphInputError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphInputError("order too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed)."""
    if not data:
        raise GraphInputError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start:start + width]
    if len(chunk) < width:
        raise GraphInputError("truncated graph6 order field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, start + width


def emit_graph6(g: Graph) -> str:
    """Upper triangle read column by column, six bits per printable character."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_n(g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise GraphInputError("graph6 must be ASCII") from None
    if any(c < 63 or c > 126 for c in data):
        raise GraphInputError("graph6 character outside 63..126")
    n, used = _decode_n(data)
    payload = data[used:]
    nbits = n * (n - 1) // 2
    if len(payload) != (nbits + 5) // 6:
        raise GraphInputError(
            f"graph6 payload has {len(payload)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    rows = [0] * n
    k = 0
    bitpos = 0
    value = 0
    for j in range(1, n):
        for i in range(j):
            if bitpos == 0:
                value = payload[k] - 63
                k += 1
            bit = value >> (5 - bitpos) & 1
            bitpos = (bitpos + 1) % 6
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    if bitpos and value & ((1 << (6 - bitpos)) - 1):
        raise GraphInputError("non-zero graph6 padding bits")
    return Graph(n, tuple(rows))
