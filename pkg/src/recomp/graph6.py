"""Bit-exact graph6 text encoding.

Order prefix: one byte n + 63 for n <= 62, else '~' followed by three
bytes holding n in 18 bits, 6 bits per byte, most significant group
first.  Adjacency: upper-triangle bits in column order x(0,1), x(0,2),
x(1,2), x(0,3), ..., zero-padded to a multiple of 6, each 6-bit group
(first bit most significant) + 63 printed as one byte.
"""

from __future__ import annotations

from .errors import DomainError
from .graphs import MAX_ORDER, Graph


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise DomainError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise DomainError(f"byte {ch!r} outside graph6 range")
        vals.append(v)
    if vals[0] == 63:  # '~' long form
        if len(vals) < 4:
            raise DomainError("truncated graph6 order")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if not 1 <= n <= MAX_ORDER:
        raise DomainError(f"graph6 order {n} unsupported (1..{MAX_ORDER})")
    m = n * (n - 1) // 2
    if len(body) != (m + 5) // 6:
        raise DomainError("graph6 body length does not match the order")
    bits = []
    for v in body:
        for s_ in range(5, -1, -1):
            bits.append(v >> s_ & 1)
    if any(bits[m:]):
        raise DomainError("nonzero padding bits")
    rows = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            if bits[b]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            b += 1
    return Graph(n, tuple(rows))
