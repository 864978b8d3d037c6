"""graph6 encoding and decoding, plus sparse6 decoding.

Bit-exact with the format description shipped with nauty (``formats.txt``).
sparse6 is accepted on input only.
"""

from __future__ import annotations

from .graph import Graph, _trusted

HEADER = b">>graph6<<"
SPARSE_HEADER = b">>sparse6<<"


class FormatError(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_order(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_order(data: bytes, start: int) -> tuple[int, int]:
    """Return (n, index of the first byte after the order field)."""
    if start >= len(data):
        raise FormatError("missing order byte", start)
    if data[start] != 126:
        return data[start] - 63, start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        width, pos = 6, start + 2
    else:
        width, pos = 3, start + 1
    if pos + width > len(data):
        raise FormatError("truncated multi-byte order field", len(data))
    n = 0
    for b in data[pos:pos + width]:
        n = (n << 6) | (b - 63)
    return n, pos + width


def _check_printable(data: bytes, base: int) -> None:
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b!r} outside the printable range 63..126", base + i)


def emit_graph6(g: Graph) -> bytes:
    n = g.n
    out = bytearray(_encode_order(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
    body = data[base:]
    _check_printable(body, base)
    n, pos = _decode_order(body, 0)
    need = (n * (n - 1) // 2 + 5) // 6
    have = len(body) - pos
    if have < need:
        raise FormatError(f"expected {need} adjacency bytes, found {have}", base + len(body))
    if have > need:
        raise FormatError("trailing bytes after adjacency data", base + pos + need)
    adj = [0] * n
    k = 0
    chunk = body[pos:]
    for j in range(1, n):
        for i in range(j):
            if (chunk[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if k % 6 and (chunk[-1] - 63) & ((1 << (6 - k % 6)) - 1):
        raise FormatError("non-zero padding bits", base + len(body) - 1)
    return _trusted(n, adj)


def parse_sparse6(text: bytes | str) -> Graph:
    """Decode a sparse6 line; loops are dropped and parallel edges merged."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    base = len(SPARSE_HEADER) if data.startswith(SPARSE_HEADER) else 0
    body = data[base:]
    if not body.startswith(b":"):
        raise FormatError("sparse6 line must start with ':'", base)
    _check_printable(body[1:], base + 1)
    n, pos = _decode_order(body, 1)
    k = 1
    while 1 << k < n:
        k += 1
    adj = [0] * n
    v = 0
    for b, x in _sparse6_pairs(body[pos:], k):
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        elif x != v:
            adj[x] |= 1 << v
            adj[v] |= 1 << x
    return _trusted(n, adj)


def _sparse6_pairs(chunk: bytes, k: int):
    it = iter(b - 63 for b in chunk)
    d = 0
    dlen = 0
    while True:
        if dlen < 1:
            d = next(it, None)
            if d is None:
                return
            dlen = 6
        dlen -= 1
        b = d >> dlen & 1
        x = d & ((1 << dlen) - 1)
        xlen = dlen
        while xlen < k:
            d = next(it, None)
            if d is None:
                return
            dlen = 6
            x = (x << 6) | d
            xlen += 6
        x >>= xlen - k
        dlen = xlen - k
        yield b, x


def parse_line(text: bytes | str) -> Graph:
    """Decode one line in either graph6 or sparse6."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    stripped = data.removeprefix(SPARSE_HEADER)
    if stripped.startswith(b":"):
        return parse_sparse6(data)
    return parse_graph6(data)
