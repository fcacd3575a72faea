"""graph6 encoding and decoding.

Only the order header and the upper-triangle bit stream are supported; the
optional ``>>graph6<<`` file header is stripped when present.
"""

from __future__ import annotations

import logging
from typing import Iterable, Iterator, Tuple, Union

from .graph import Graph, GraphError

log = logging.getLogger(__name__)

HEADER = b">>graph6<<"


class Graph6Error(GraphError):
    pass


def _order_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise Graph6Error(f"order {n} too large for graph6")


def encode(g: Graph) -> bytes:
    """graph6 line for ``g`` without the trailing newline."""
    out = bytearray(_order_bytes(g.n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def encode_str(g: Graph) -> str:
    return encode(g).decode("ascii")


def decode(line: Union[bytes, str]) -> Graph:
    if isinstance(line, str):
        line = line.encode("ascii", errors="replace")
    line = line.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    for pos, ch in enumerate(line):
        if not 63 <= ch <= 126:
            raise Graph6Error(f"character {ch!r} at position {pos} outside 63..126")
    if line[0] == 126:
        if len(line) >= 2 and line[1] == 126:
            raise Graph6Error("orders beyond 258047 are not supported")
        if len(line) < 4:
            raise Graph6Error("truncated long-form order header")
        n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63)
        body = line[4:]
    else:
        n = line[0] - 63
        body = line[1:]
    if n == 0:
        raise Graph6Error("graph6 line encodes the null graph")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated bit stream: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data: need {need} bytes, got {len(body)}")
    rows = [0] * n
    bits = _bit_stream(body)
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _bit_stream(body: bytes) -> Iterator[int]:
    for ch in body:
        v = ch - 63
        for shift in range(5, -1, -1):
            yield v >> shift & 1


def read_lines(source: Iterable[Union[bytes, str]], strict: bool = True) -> Iterator[Tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line.

    Malformed lines raise in strict mode and are skipped otherwise.
    """
    for lineno, raw in enumerate(source, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield lineno, decode(text)
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            log.warning("skipping line %d: %s", lineno, exc)
