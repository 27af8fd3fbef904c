"""Graph and hypergraph types plus the basic constructions.

Vertices are ``0..n-1``. A :class:`Graph` stores one adjacency bit row per
vertex; a :class:`Hypergraph` stores its hyperedges as vertex bitmasks. Both
are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence, Union

from .exceptions import UniformityError


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _edge_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as ``n`` adjacency bit rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside [0, {self.n})")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << i) for i in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def to_hypergraph(self) -> "Hypergraph":
        return Hypergraph(self.n, 2, tuple((1 << i) | (1 << j) for i, j in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Hypergraph:
    """``p``-uniform hypergraph; ``edges`` holds vertex bitmasks.

    Edges are kept in lexicographic order of their sorted vertex lists, which
    is also the order used by the JSON codec.
    """

    n: int
    p: int
    edges: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.p < 2:
            raise ValueError(f"uniformity must be at least 2, got {self.p}")
        full = (1 << self.n) - 1
        for e in self.edges:
            if e & ~full:
                raise ValueError(f"edge {bits(e)} has a vertex outside [0, {self.n})")
            if e.bit_count() != self.p:
                raise ValueError(f"edge {bits(e)} does not have exactly {self.p} vertices")
        ordered = tuple(sorted(set(self.edges), key=_edge_key))
        if len(ordered) != len(self.edges):
            raise ValueError("duplicate hyperedge")
        object.__setattr__(self, "edges", ordered)

    @classmethod
    def from_edges(cls, n: int, p: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        masks = []
        for e in edges:
            e = list(e)
            if len(set(e)) != len(e):
                raise ValueError(f"edge {e} repeats a vertex")
            masks.append(mask_of(e))
        return cls(n, p, tuple(masks))

    @classmethod
    def complete(cls, n: int, p: int) -> "Hypergraph":
        return cls(n, p, tuple(mask_of(c) for c in combinations(range(n), p)))

    @classmethod
    def empty(cls, n: int, p: int) -> "Hypergraph":
        return cls(n, p, ())

    @cached_property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Adjacency rows; only meaningful for ``p == 2``."""
        if self.p != 2:
            raise UniformityError("adjacency rows exist only for graphs (p=2)")
        rows = [0] * self.n
        for e in self.edges:
            i, j = bits(e)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return tuple(rows)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_lists(self) -> list[list[int]]:
        return [bits(e) for e in self.edges]

    def to_graph(self) -> Graph:
        if self.p != 2:
            raise UniformityError(f"cannot view a {self.p}-graph as a graph")
        return Graph(self.n, self.rows)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, p={self.p}, edges={self.edge_lists()})"


GraphLike = Union[Graph, Hypergraph]


def as_hypergraph(g: GraphLike) -> Hypergraph:
    if isinstance(g, Hypergraph):
        return g
    if isinstance(g, Graph):
        return g.to_hypergraph()
    raise TypeError(f"expected Graph or Hypergraph, got {type(g).__name__}")


def adjacency_rows(g: GraphLike) -> tuple[int, ...]:
    if isinstance(g, Graph):
        return g.adj
    return g.rows


def relabel(h: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Image of ``h`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(h.n)):
        raise ValueError("perm must be a permutation of the vertex set")
    return Hypergraph(h.n, h.p, tuple(mask_of(perm[v] for v in bits(e)) for e in h.edges))


def induced(h: Hypergraph, keep: Sequence[int]) -> Hypergraph:
    """Sub-hypergraph induced on ``keep``; vertices renumbered in the given order."""
    index = {v: i for i, v in enumerate(keep)}
    keep_mask = mask_of(keep)
    edges = [mask_of(index[v] for v in bits(e)) for e in h.edges if e & keep_mask == e]
    return Hypergraph(len(keep), h.p, tuple(edges))


def delete_vertices(h: Hypergraph, drop: Iterable[int]) -> Hypergraph:
    drop = set(drop)
    return induced(h, [v for v in range(h.n) if v not in drop])


def disjoint_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    if a.p != b.p:
        raise UniformityError(f"uniformity mismatch: {a.p} vs {b.p}")
    return Hypergraph(a.n + b.n, a.p, a.edges + tuple(e << a.n for e in b.edges))


# --- constructions ---------------------------------------------------------


def turan_part_sizes(m: int, k: int) -> list[int]:
    """Part sizes of T(m, k), larger parts first. ``k == 0`` gives no parts."""
    if m < 0 or k < 0:
        raise ValueError("make_turan needs m >= 0 and k >= 0")
    if k == 0:
        return []
    q, rem = divmod(m, k)
    return [q + 1] * rem + [q] * (k - rem)


def make_turan(m: int, k: int) -> Graph:
    """Complete ``k``-partite Turán graph on ``m`` vertices.

    Parts occupy contiguous index ranges, larger parts first. ``T(m, 0)`` is
    the edgeless graph on ``m`` vertices.
    """
    sizes = turan_part_sizes(m, k)
    if not sizes:
        return Graph.empty(m)
    full = (1 << m) - 1
    rows = []
    start = 0
    for size in sizes:
        part = ((1 << size) - 1) << start
        rows.extend([full & ~part] * size)
        start += size
    return Graph(m, tuple(rows))


def join(g: Graph, g2: Graph) -> Graph:
    """All edges of both graphs plus every pair across; ``g`` keeps indices ``0..n(g)-1``."""
    n1, n2 = g.n, g2.n
    left = (1 << n1) - 1
    right = ((1 << n2) - 1) << n1
    rows = [row | right for row in g.adj] + [(row << n1) | left for row in g2.adj]
    return Graph(n1 + n2, tuple(rows))


def hyper_join(h: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Union of both hypergraphs plus every ``p``-set meeting both vertex sets."""
    if h.p != h2.p:
        raise UniformityError(f"uniformity mismatch: {h.p} vs {h2.p}")
    p, n1, n = h.p, h.n, h.n + h2.n
    edges = list(h.edges) + [e << n1 for e in h2.edges]
    for k in range(1, p):
        for a in combinations(range(n1), k):
            am = mask_of(a)
            for b in combinations(range(n1, n), p - k):
                edges.append(am | mask_of(b))
    return Hypergraph(n, p, tuple(edges))


def blowup_layout(n: int, U: Iterable[int], m: int) -> dict[int, list[int]]:
    """Where each original vertex lands in a partial ``(m, U)``-blowup.

    Vertices outside ``U`` come first in their original order, then the ``m``
    clones of each ``u`` in ``U``, grouped by ``u`` in increasing order.
    """
    U = sorted(set(U))
    if any(not 0 <= u < n for u in U):
        raise ValueError("U must be a subset of the vertex set")
    if m < 1:
        raise ValueError("blowup multiplicity must be at least 1")
    in_u = set(U)
    layout: dict[int, list[int]] = {}
    nxt = 0
    for v in range(n):
        if v not in in_u:
            layout[v] = [nxt]
            nxt += 1
    for u in U:
        layout[u] = list(range(nxt, nxt + m))
        nxt += m
    return layout


def partial_blowup(h: GraphLike, U: Iterable[int], m: int) -> Hypergraph:
    """Replace each ``u`` in ``U`` by ``m`` clones.

    A hyperedge meeting ``U`` in ``q`` vertices turns into ``m**q`` hyperedges,
    one for every choice of clones.
    """
    h = as_hypergraph(h)
    layout = blowup_layout(h.n, U, m)
    new_n = sum(len(v) for v in layout.values())
    edges = []
    for e in h.edges:
        for choice in product(*(layout[v] for v in bits(e))):
            edges.append(mask_of(choice))
    return Hypergraph(new_n, h.p, tuple(edges))
