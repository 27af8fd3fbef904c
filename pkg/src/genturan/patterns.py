"""Small named patterns: ``K5``, ``K5^3``, ``P3``, ``C4``, ``M2``, ``S3``, ``E2``."""

from __future__ import annotations

import re

from .graphs import Graph, Hypergraph

_NAME = re.compile(r"^([KPCMSE])(\d+)(?:\^(\d+))?$")


def path(k: int) -> Graph:
    """Path on ``k`` vertices."""
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def matching(k: int) -> Graph:
    """``k`` disjoint edges on ``2k`` vertices."""
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def star(k: int) -> Graph:
    """K_{1,k}, centre 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def named_pattern(name: str) -> Hypergraph:
    m = _NAME.match(name.strip())
    if not m:
        raise ValueError(f"unknown pattern {name!r}; expected K<s>[^p], E<k>[^p], P<k>, C<k>, M<k> or S<k>")
    kind, k, p = m.group(1), int(m.group(2)), int(m.group(3) or 2)
    if p < 2:
        raise ValueError("uniformity must be at least 2")
    if kind == "K":
        return Hypergraph.complete(k, p)
    if kind == "E":
        return Hypergraph.empty(k, p)
    if p != 2:
        raise ValueError(f"{kind}-patterns are graphs only")
    build = {"P": path, "C": cycle, "M": matching, "S": star}[kind]
    return build(k).to_hypergraph()
