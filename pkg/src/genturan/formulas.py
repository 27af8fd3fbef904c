"""Closed-form values and extremal constructions for ex(n, K_s, tK_r).

The central object is the construction ``K_a + T(m, x)``: an apex clique of
order ``a = t(r - x) - 1`` joined to a Turán graph on the remaining
``m = n - a`` vertices, where ``x = ceil((tr - s)/(t - 1)) - 1``. For
uniformity ``p >= 3`` the Turán graph is replaced by a caller-supplied tail
hypergraph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Optional, Union

from .canon import canonical_form, from_form
from .counting import automorphism_count, count_cliques, count_copies, iter_embeddings
from .exceptions import PreconditionError, UniformityError
from .graphs import (
    GraphLike,
    Hypergraph,
    as_hypergraph,
    bits,
    delete_vertices,
    disjoint_union,
    hyper_join,
    make_turan,
    mask_of,
    turan_part_sizes,
)

TailSupplier = Callable[[int, int, int], Hypergraph]


@dataclass(frozen=True)
class ProblemParams:
    """Parameters of ex(n, K_s^p, tK_r^p)."""

    n: int
    s: int
    r: int
    t: int
    p: int = 2

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if self.r < self.p:
            raise ValueError(f"r must be at least p, got r={self.r}, p={self.p}")
        if self.s < self.p:
            raise ValueError(f"s must be at least p, got s={self.s}, p={self.p}")
        if self.t < 1:
            raise ValueError(f"t must be at least 1, got {self.t}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")


def x_exponent(s: int, r: int, t: int) -> int:
    """``ceil((tr - s)/(t - 1)) - 1``, defined for ``t >= 2`` and ``r <= s < tr``."""
    if t < 2:
        raise PreconditionError("x is undefined for t < 2 (division by t - 1)")
    if not r <= s < t * r:
        raise PreconditionError(f"x needs r <= s < tr, got s={s}, r={r}, t={t}")
    return -(-(t * r - s) // (t - 1)) - 1


def _tail_order(s: int, r: int, t: int) -> int:
    """Part count of the Turán tail; ``r - 1`` when ``s < r`` (Moon/Zykov regime)."""
    if s < r:
        return r - 1
    return x_exponent(s, r, t)


def apex_size(s: int, r: int, t: int) -> int:
    return t * (r - _tail_order(s, r, t)) - 1


def elementary_symmetric(values: list[int], j: int) -> int:
    """``e_j`` of ``values``: the number of ``K_j`` in the complete multipartite graph with these parts."""
    if j < 0:
        return 0
    e = [1] + [0] * j
    for v in values:
        for k in range(j, 0, -1):
            e[k] += e[k - 1] * v
    return e[j]


# --- construction specs ----------------------------------------------------


@dataclass(frozen=True)
class TuranTail:
    m: int
    x: int


@dataclass(frozen=True)
class SuppliedTail:
    hypergraph: Hypergraph


@dataclass(frozen=True)
class ConstructionSpec:
    """Apex clique of order ``apex`` joined to ``tail``.

    With ``joined=False`` the tail is added as isolated vertices instead. This
    is the case ``x + 1 < p``: there every ``(x+1)``-set is a clique, so
    joining would let cliques take up to ``p - 1`` tail vertices.
    """

    apex: int
    tail: Union[TuranTail, SuppliedTail]
    p: int = 2
    joined: bool = True

    def __post_init__(self):
        if self.apex < 0:
            raise ValueError("apex size must be non-negative")
        if isinstance(self.tail, TuranTail) and (self.tail.m < 0 or self.tail.x < 0):
            raise ValueError("Turán tail needs m >= 0 and x >= 0")

    @property
    def num_vertices(self) -> int:
        if isinstance(self.tail, TuranTail):
            return self.apex + self.tail.m
        return self.apex + self.tail.hypergraph.n


def realize(spec: ConstructionSpec) -> Hypergraph:
    if isinstance(spec.tail, TuranTail):
        if spec.p != 2:
            raise UniformityError("Turán tails are graphs; supply a tail hypergraph for p >= 3")
        tail = make_turan(spec.tail.m, spec.tail.x).to_hypergraph()
    else:
        tail = spec.tail.hypergraph
        if tail.p != spec.p:
            raise UniformityError(f"tail has uniformity {tail.p}, expected {spec.p}")
    apex = Hypergraph.complete(spec.apex, spec.p)
    if not spec.joined:
        return disjoint_union(apex, tail)
    return hyper_join(apex, tail)


def _default_tail_supplier(m: int, x: int, p: int) -> Hypergraph:
    from .oracle import search_tail_T

    return search_tail_T(m, x, p)


def construction_spec(params: ProblemParams, tail_supplier: Optional[TailSupplier] = None) -> ConstructionSpec:
    n, s, r, t, p = params.n, params.s, params.r, params.t, params.p
    if t == 1:
        x, apex = r - 1, 0
    elif s >= t * r:
        raise PreconditionError("s >= tr: every K_s contains tK_r, so no construction applies")
    else:
        x = _tail_order(s, r, t)
        apex = t * (r - x) - 1
    if n < apex:
        raise PreconditionError(f"n={n} is smaller than the apex clique ({apex} vertices)")
    m = n - apex
    joined = x + 1 >= p
    if p == 2:
        return ConstructionSpec(apex, TuranTail(m, x), 2, joined)
    supplier = tail_supplier or _default_tail_supplier
    tail = supplier(m, x, p)
    if tail.n != m or tail.p != p:
        raise ValueError(f"tail supplier returned n={tail.n}, p={tail.p}; expected n={m}, p={p}")
    if x + 1 >= p:
        if count_cliques(tail, x + 1):
            raise ValueError(f"supplied tail contains K_{x + 1}^{p}")
    elif tail.num_edges:
        raise ValueError(f"supplied tail must be edgeless when x + 1 < p (x={x}, p={p})")
    return ConstructionSpec(apex, SuppliedTail(tail), p, joined)


def extremal_construction(params: ProblemParams, tail_supplier: Optional[TailSupplier] = None) -> Hypergraph:
    """The tK_r^p-free host ``K_a^p + tail`` on ``n`` vertices (tail isolated when ``x + 1 < p``)."""
    return realize(construction_spec(params, tail_supplier))


def ex_closed_value(params: ProblemParams) -> int:
    """Copies of ``K_s`` in the extremal construction, in closed form (graphs only).

    ``s >= tr`` gives 0 and ``t == 1`` gives the Turán-graph count. When ``n``
    is below the apex order the complete graph ``K_n`` is itself tK_r-free and
    ``C(n, s)`` is returned.
    """
    n, s, r, t = params.n, params.s, params.r, params.t
    if params.p != 2:
        raise UniformityError("the closed form is only available for graphs (p=2)")
    if s >= t * r:
        return 0
    if t == 1:
        return elementary_symmetric(turan_part_sizes(n, r - 1), s)
    x = _tail_order(s, r, t)
    apex = t * (r - x) - 1
    if n < apex:
        return comb(n, s)
    parts = turan_part_sizes(n - apex, x)
    return sum(comb(apex, s - j) * elementary_symmetric(parts, j) for j in range(0, s + 1))


def lemma_hgt_value(s: int, r: int, t: int) -> int:
    """``C(tr - 1, s)``, the K_s^r count of K_{tr-1}^r, valid when ``s > t(r - 1)``."""
    if not s > t * (r - 1):
        raise PreconditionError(f"needs s > t(r-1), got s={s}, r={r}, t={t}")
    return comb(t * r - 1, s)


# --- reduced objective -----------------------------------------------------


@dataclass(frozen=True)
class AlphaEntry:
    graph: Hypergraph
    alpha: int
    deletion_sets: tuple[tuple[int, ...], ...] = field(default=())


@dataclass(frozen=True)
class AlphaTable:
    pattern: Hypergraph
    t: int
    entries: tuple[AlphaEntry, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _extension_count(pattern: Hypergraph, core: Hypergraph, t: int) -> int:
    """Copies of ``pattern`` in ``core + K_{t-1}`` that contain all of ``core``.

    Such a copy uses ``core`` plus ``d = |pattern| - |core|`` apex vertices.
    The apex vertices are interchangeable, so count on the first ``d`` of them
    and multiply by ``C(t - 1, d)``.
    """
    d = pattern.n - core.n
    if d < 0 or d > t - 1:
        return 0
    host = hyper_join(core, Hypergraph.complete(d, pattern.p))
    core_edges = core.edge_set
    maps = 0
    for image in iter_embeddings(pattern, host):
        covered = {mask_of(image[v] for v in bits(e)) for e in pattern.edges}
        if core_edges <= covered:
            maps += 1
    return comb(t - 1, d) * maps // automorphism_count(pattern)


def alpha_coefficients(pattern: GraphLike, t: int) -> AlphaTable:
    """Deletion classes ``H - D`` (``|D| <= t - 1``) with their extension counts.

    Entries are grouped by isomorphism type; each records the deletion sets
    that produce it.
    """
    h = as_hypergraph(pattern)
    if h.p != 2:
        raise UniformityError("alpha coefficients are defined for graphs (p=2)")
    if t < 2:
        raise PreconditionError("alpha coefficients need t >= 2")
    automorphism_count(h)  # enforces the pattern size cap
    groups: dict[tuple, list[tuple[int, ...]]] = {}
    for d in range(0, min(t - 1, h.n) + 1):
        for D in combinations(range(h.n), d):
            groups.setdefault(canonical_form(delete_vertices(h, D)), []).append(D)
    entries = []
    for form in sorted(groups, key=lambda f: (-f[0], f)):
        core = from_form(form)
        alpha = _extension_count(h, core, t)
        entries.append(AlphaEntry(core, alpha, tuple(groups[form])))
    return AlphaTable(h, t, tuple(entries))


def reduced_objective(pattern: GraphLike, t: int, g: GraphLike, table: Optional[AlphaTable] = None) -> int:
    """``sum_i alpha_i * N(H_i, g)``, which equals ``N(H, K_{t-1} + g)``."""
    table = table or alpha_coefficients(pattern, t)
    g = as_hypergraph(g)
    total = 0
    for entry in table:
        total += entry.alpha * (count_copies(entry.graph, g) if entry.graph.n else 1)
    return total
