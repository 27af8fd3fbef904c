"""Exact clique counts, pattern copy counts and disjoint clique packings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, perm
from typing import Iterator, Optional

from .canon import twin_classes
from .exceptions import PatternTooLarge, UniformityError
from .graphs import GraphLike, Hypergraph, as_hypergraph, bits, mask_of

MAX_PATTERN_VERTICES = 10


@dataclass(frozen=True)
class CliqueFamily:
    """Vertex sets (bitmasks) of the ``q``-cliques of a host on ``n`` vertices."""

    n: int
    q: int
    sets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [bits(s) for s in self.sets]


def _extends_clique(h: Hypergraph, clique: list[int], clique_mask: int, w: int) -> bool:
    """Whether ``clique + [w]`` is still a clique, given that ``clique`` is one."""
    if h.p == 2:
        return h.rows[w] & clique_mask == clique_mask
    if len(clique) < h.p - 1:
        return True
    es = h.edge_set
    wb = 1 << w
    return all(mask_of(c) | wb in es for c in combinations(clique, h.p - 1))


def _iter_cliques(h: Hypergraph, q: int) -> Iterator[int]:
    if q == 0:
        yield 0
        return
    if h.p == 2:
        rows = h.rows

        def grow(cand: int, size: int, acc: int):
            if size == q:
                yield acc
                return
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                # only higher-indexed neighbours keep the listing duplicate-free
                yield from grow(cand & rows[v], size + 1, acc | low)

        yield from grow((1 << h.n) - 1, 0, 0)
        return

    def grow_h(start: int, clique: list[int], acc: int):
        if len(clique) == q:
            yield acc
            return
        for w in range(start, h.n - (q - len(clique)) + 1):
            if _extends_clique(h, clique, acc, w):
                clique.append(w)
                yield from grow_h(w + 1, clique, acc | (1 << w))
                clique.pop()

    yield from grow_h(0, [], 0)


def list_cliques(h: GraphLike, q: int) -> CliqueFamily:
    """All ``q``-sets spanning a complete sub-hypergraph, in lexicographic order."""
    if q < 0:
        raise ValueError("clique order must be non-negative")
    h = as_hypergraph(h)
    sets = sorted(_iter_cliques(h, q), key=bits)
    return CliqueFamily(h.n, q, tuple(sets))


def clique_types(h: Hypergraph, q: int, classes: list[list[int]]) -> list[tuple[tuple[int, int], ...]]:
    """Clique shapes up to twin symmetry.

    Each shape is a tuple of ``(class index, how many members)`` pairs. Since
    any permutation inside a twin class is an automorphism, whether a shape is
    a clique does not depend on which members are picked, so the first members
    stand in for all of them.
    """
    out: list[tuple[tuple[int, int], ...]] = []
    nclasses = len(classes)

    def rec(ci: int, clique: list[int], acc: int, shape: list[tuple[int, int]]):
        if len(clique) == q:
            out.append(tuple(shape))
            return
        if ci == nclasses:
            return
        members = classes[ci]
        added = 0
        for k in range(1, min(len(members), q - len(clique)) + 1):
            w = members[k - 1]
            if not _extends_clique(h, clique, acc, w):
                break
            clique.append(w)
            acc |= 1 << w
            added += 1
            shape.append((ci, k))
            rec(ci + 1, clique, acc, shape)
            shape.pop()
        for _ in range(added):
            acc ^= 1 << clique.pop()
        rec(ci + 1, clique, acc, shape)

    rec(0, [], 0, [])
    return out


def count_cliques(h: GraphLike, q: int) -> int:
    """Number of ``q``-subsets all of whose ``p``-subsets are hyperedges."""
    if q < 0:
        raise ValueError("clique order must be non-negative")
    h = as_hypergraph(h)
    if q < h.p:
        return comb(h.n, q)
    classes = twin_classes(h)
    total = 0
    for shape in clique_types(h, q, classes):
        ways = 1
        for ci, k in shape:
            ways *= comb(len(classes[ci]), k)
        total += ways
    return total


# --- pattern copies --------------------------------------------------------


def _check_pattern(pattern: Hypergraph) -> None:
    if pattern.n > MAX_PATTERN_VERTICES:
        raise PatternTooLarge(f"pattern has {pattern.n} vertices; the cap is {MAX_PATTERN_VERTICES}")


def _embedding_order(pattern: Hypergraph) -> tuple[list[int], list[int]]:
    """Non-isolated vertices in a connectivity-first order, then isolated ones."""
    deg = [0] * pattern.n
    nbr = [0] * pattern.n
    for e in pattern.edges:
        for v in bits(e):
            deg[v] += 1
            nbr[v] |= e & ~(1 << v)
    active = [v for v in range(pattern.n) if deg[v]]
    isolated = [v for v in range(pattern.n) if not deg[v]]
    order: list[int] = []
    placed = 0
    remaining = set(active)
    while remaining:
        v = max(remaining, key=lambda u: ((nbr[u] & placed).bit_count(), deg[u], -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order, isolated


def iter_embeddings(pattern: Hypergraph, host: Hypergraph) -> Iterator[tuple[int, ...]]:
    """Yield every injective hyperedge-preserving map as a tuple ``image[v]``."""
    if pattern.p != host.p:
        raise UniformityError(f"uniformity mismatch: pattern {pattern.p} vs host {host.p}")
    order, isolated = _embedding_order(pattern)
    order = order + isolated
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[list[int]]] = [[] for _ in order]
    for e in pattern.edges:
        idx = sorted(pos[v] for v in bits(e))
        closing[idx[-1]].append(idx)
    es = host.edge_set
    image = [0] * len(order)

    def rec(i: int, used: int):
        if i == len(order):
            out = [0] * pattern.n
            for j, v in enumerate(order):
                out[v] = image[j]
            yield tuple(out)
            return
        for w in range(host.n):
            if used >> w & 1:
                continue
            image[i] = w
            if all(mask_of(image[j] for j in e) in es for e in closing[i]):
                yield from rec(i + 1, used | (1 << w))

    yield from rec(0, 0)


def count_embeddings(pattern: Hypergraph, host: Hypergraph) -> int:
    """Injective maps sending every pattern hyperedge onto a host hyperedge."""
    if pattern.p != host.p:
        raise UniformityError(f"uniformity mismatch: pattern {pattern.p} vs host {host.p}")
    if pattern.n > host.n:
        return 0
    order, isolated = _embedding_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    k = len(order)
    free_maps = perm(host.n - k, len(isolated))

    if host.p == 2:
        prows = pattern.rows
        hrows = host.rows
        back = [[pos[w] for w in bits(prows[v]) if pos.get(w, k) < i] for i, v in enumerate(order)]
        full = (1 << host.n) - 1
        image = [0] * k

        def rec2(i: int, used: int) -> int:
            if i == k:
                return 1
            cand = full & ~used
            for j in back[i]:
                cand &= hrows[image[j]]
            total = 0
            while cand:
                low = cand & -cand
                cand ^= low
                image[i] = low.bit_length() - 1
                total += rec2(i + 1, used | low)
            return total

        return rec2(0, 0) * free_maps

    # each hyperedge is checked when its last vertex (in ``order``) is placed
    closing: list[list[list[int]]] = [[] for _ in range(k)]
    for e in pattern.edges:
        idx = sorted(pos[v] for v in bits(e))
        closing[idx[-1]].append(idx)
    es = host.edge_set
    image = [0] * k

    def rech(i: int, used: int) -> int:
        if i == k:
            return 1
        total = 0
        for w in range(host.n):
            if used >> w & 1:
                continue
            image[i] = w
            if all(mask_of(image[j] for j in e) in es for e in closing[i]):
                total += rech(i + 1, used | (1 << w))
        return total

    return rech(0, 0) * free_maps


def automorphism_count(h: GraphLike) -> int:
    """Order of the automorphism group, by exhaustive (pruned) permutation search."""
    h = as_hypergraph(h)
    _check_pattern(h)
    return count_embeddings(h, h)


def _is_complete(h: Hypergraph) -> bool:
    return h.num_edges == comb(h.n, h.p)


def count_copies(pattern: GraphLike, host: GraphLike) -> int:
    """Number of (not necessarily induced) subgraphs of ``host`` isomorphic to ``pattern``."""
    pattern, host = as_hypergraph(pattern), as_hypergraph(host)
    if pattern.p != host.p:
        raise UniformityError(f"uniformity mismatch: pattern {pattern.p} vs host {host.p}")
    _check_pattern(pattern)
    if _is_complete(pattern):
        return count_cliques(host, pattern.n)
    return count_embeddings(pattern, host) // automorphism_count(pattern)


# --- disjoint cliques ------------------------------------------------------


def find_disjoint_cliques(h: GraphLike, t: int, r: int) -> Optional[list[list[int]]]:
    """``t`` pairwise vertex-disjoint ``r``-cliques, or ``None`` if there are none.

    Cliques are grouped into shapes up to twin symmetry and packed with
    non-decreasing shape index, so permuted packings are never revisited.
    """
    h = as_hypergraph(h)
    if t < 1:
        raise ValueError("t must be at least 1")
    if r < h.p:
        raise ValueError(f"clique order r={r} is below the uniformity p={h.p}")
    if h.n < t * r:
        return None
    classes = twin_classes(h)
    shapes = clique_types(h, r, classes)
    if not shapes:
        return None
    caps = [len(c) for c in classes]
    chosen: list[int] = []
    failed: set = set()

    def rec(start: int, need: int, room: int) -> bool:
        if need == 0:
            return True
        if room < need * r:
            return False
        key = (start, need, tuple(caps))
        if key in failed:
            return False
        for si in range(start, len(shapes)):
            shape = shapes[si]
            if all(caps[ci] >= k for ci, k in shape):
                for ci, k in shape:
                    caps[ci] -= k
                chosen.append(si)
                if rec(si, need - 1, room - r):
                    return True
                chosen.pop()
                for ci, k in shape:
                    caps[ci] += k
        failed.add(key)
        return False

    if not rec(0, t, h.n):
        return None
    nxt = [0] * len(classes)
    witness = []
    for si in chosen:
        vs = []
        for ci, k in shapes[si]:
            vs.extend(classes[ci][nxt[ci]:nxt[ci] + k])
            nxt[ci] += k
        witness.append(sorted(vs))
    return witness


def contains_disjoint_cliques(h: GraphLike, t: int, r: int) -> bool:
    """Whether ``h`` contains ``t`` vertex-disjoint copies of the ``r``-clique."""
    return find_disjoint_cliques(h, t, r) is not None
