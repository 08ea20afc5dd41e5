"""Text serializations: the plain edge-list format and graph6.

Edge-list format::

    n m
    u v        (m lines, 0 <= u < v < n, ascending)

with a trailing newline. The parser accepts pairs in any order or
orientation and canonicalizes them; the emitter always writes canonical
text. graph6 follows the published byte format (upper triangle in column
order, 6 bits per printable byte, offset 63).
"""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph_core import DEFAULT_MAX_VERTICES, Graph, GraphError, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list_text(stream: str | TextIO, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    text = stream if isinstance(stream, str) else stream.read()
    lines = text.splitlines()
    if not lines:
        raise GraphError("empty edge-list input")
    if not text.endswith("\n"):
        raise GraphError("edge-list input must end with a newline")
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise GraphError(f"line 1: expected 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} edge lines follow")
    pairs = []
    for lineno, ln in enumerate(lines[1:], start=2):
        if not ln.strip():
            continue
        toks = ln.split()
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise GraphError(f"line {lineno}: expected 'u v', got {ln!r}")
        pairs.append((int(toks[0]), int(toks[1])))
    return from_edge_list(n, pairs, max_vertices=max_vertices)


def emit_edge_list_text(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph6 size field supports at most 258047 vertices here")


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphError("graph6: empty line")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4:
        raise GraphError("graph6: truncated size field")
    if data[1] == 126:
        if len(data) < 8:
            raise GraphError("graph6: truncated size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(line: str | bytes, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    for b in data:
        if not 63 <= b <= 126:
            raise GraphError(f"graph6: non-printable or out-of-range byte {b!r}")
    n, pos = _decode_size(data)
    if n > max_vertices:
        raise GraphError(f"graph6: {n} vertices exceeds the cap of {max_vertices}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise GraphError(f"graph6: expected {nbytes} data bytes for n={n}, got {len(body)}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("graph6: nonzero padding bits")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return from_edge_list(n, pairs, max_vertices=max_vertices)


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return _encode_size(g.n) + "".join(chars)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | GraphError]]:
    """Yield ``(lineno, text, graph_or_error)``; blank lines are skipped.

    Parse failures are yielded as values so a scan can report and continue.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text)
        except GraphError as exc:
            yield lineno, text, exc


def read_graph_file(path: str) -> Graph:
    """Read an edge-list file or a one-graph graph6 file, sniffing the format."""
    with open(path) as fh:
        text = fh.read()
    first = text.split("\n", 1)[0].split()
    if len(first) == 2 and all(t.isdigit() for t in first):
        return parse_edge_list_text(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphError(f"{path}: expected one graph6 line, found {len(lines)}")
    return parse_graph6(lines[0])
