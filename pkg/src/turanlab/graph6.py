"""graph6 reader/writer.

Format: a size header N(n) followed by the upper triangle of the adjacency
matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
big-endian six bits per byte, each byte offset by 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .errors import Graph6Error
from .graph import Graph

__all__ = ["parse_graph6", "to_graph6", "read_graph6_lines", "read_graph6_file", "HEADER"]

HEADER = ">>graph6<<"
_MAX_N = 68719476735


def _encode_n(n: int) -> str:
    if n < 0 or n > _MAX_N:
        raise Graph6Error(f"vertex count {n} not representable in graph6")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""

    def group(start: int, count: int) -> int:
        if len(data) < start + count:
            raise Graph6Error("truncated size header", len(data))
        value = 0
        for i in range(start, start + count):
            value = (value << 6) | (data[i] - 63)
        return value

    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        return group(2, 6), 8
    n = group(1, 3)
    if n <= 62:
        raise Graph6Error("extended size header used for n <= 62", 0)
    return n, 4


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string without header or newline."""
    n = g.n
    out = [_encode_n(n)]
    acc = nbits = 0
    for j in range(1, n):
        row = g.adj(j)
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line. An optional ``>>graph6<<`` prefix is stripped."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        data = bytes(text)
    data = data.strip()
    base = 0
    if data.startswith(HEADER.encode()):
        base = len(HEADER)
        data = data[base:]
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside printable range 63..126", base + i)
    n, start = _decode_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: expected {nbytes} data bytes, found {len(body)}", base + len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph data", base + start + nbytes)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", base + start + nbytes - 1)
    return Graph(n, rows)


def read_graph6_lines(lines, source: str = "<input>") -> Iterator[tuple[str, Graph]]:
    """Yield ``("source:lineno", graph)`` for each nonblank line.

    Errors are re-raised as :class:`Graph6Error` naming the source location.
    """
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"{source}:{lineno}: {exc}") from exc
        yield f"{source}:{lineno}", g


def read_graph6_file(path: str | Path) -> list[tuple[str, Graph]]:
    path = Path(path)
    with path.open("r", encoding="ascii", errors="surrogateescape") as fh:
        return list(read_graph6_lines(fh, str(path)))
