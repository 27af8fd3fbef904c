"""graph6 (short form) and hypergraph JSON codecs."""

from __future__ import annotations

import json
import re

from .exceptions import ParseError, UniformityError
from .graphs import Graph, GraphLike, Hypergraph, as_hypergraph, mask_of

GRAPH6_MAX_N = 62
_INNER_ARRAY = re.compile(r"\[[^\[\]]*\]")


def to_graph6(g: GraphLike) -> str:
    if isinstance(g, Hypergraph):
        if g.p != 2:
            raise UniformityError("graph6 encodes graphs only (p=2)")
        rows = g.rows
    else:
        rows = g.adj
    n = len(rows)
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}")
    bitstr = [rows[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bitstr += [0] * (-len(bitstr) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bitstr), 6):
        val = 0
        for b in bitstr[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        raise ParseError("graph6 header lines are not supported", 0)
    if not s:
        raise ParseError("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", i)
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise ParseError("only the short graph6 form (n <= 62) is supported", 0)
    nbits = n * (n - 1) // 2
    want = 1 + (nbits + 5) // 6
    if len(s) != want:
        raise ParseError(f"expected {want} bytes for n={n}, got {len(s)}", min(len(s), want))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (ord(s[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero padding bits", len(s) - 1)
    return Graph(n, tuple(rows))


def to_hjson(h: GraphLike) -> str:
    h = as_hypergraph(h)
    return json.dumps({"n": h.n, "p": h.p, "edges": h.edge_lists()}, separators=(",", ":"))


def _edge_offsets(text: str) -> list[int]:
    key = re.search(r'"edges"\s*:\s*\[', text)
    if key is None:
        return []
    return [m.start() for m in _INNER_ARRAY.finditer(text, key.end())]


def from_hjson(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None
    if not isinstance(obj, dict) or not {"n", "p", "edges"} <= obj.keys():
        raise ParseError('expected an object with keys "n", "p", "edges"', 0)
    n, p, edges = obj["n"], obj["p"], obj["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError('"n" must be a non-negative integer', text.find('"n"'))
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise ParseError('"p" must be an integer >= 2', text.find('"p"'))
    if not isinstance(edges, list):
        raise ParseError('"edges" must be a list', text.find('"edges"'))
    offsets = _edge_offsets(text)
    masks = []
    seen = set()
    for idx, e in enumerate(edges):
        at = offsets[idx] if idx < len(offsets) else text.find('"edges"')
        if not isinstance(e, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise ParseError(f"edge {idx} is not a list of integers", at)
        if any(not 0 <= v < n for v in e):
            raise ParseError(f"edge {idx} has a vertex outside [0, {n})", at)
        if len(set(e)) != p or len(e) != p:
            raise ParseError(f"edge {idx} does not have exactly {p} distinct vertices", at)
        m = mask_of(e)
        if m in seen:
            raise ParseError(f"edge {idx} is a duplicate", at)
        seen.add(m)
        masks.append(m)
    return Hypergraph(n, p, tuple(masks))


def parse_graph_text(text: str) -> Hypergraph:
    """Decode graph6 or hypergraph JSON, chosen by the first non-blank byte."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_hjson(text)
    return from_graph6(stripped).to_hypergraph()
