"""Vertex symmetry: twin classes and canonical forms.

Two vertices are *twins* when swapping them is an automorphism. Twin-ness is
an equivalence relation and every permutation inside a twin class is an
automorphism, which the counting and packing searches exploit.

The canonical form is the lexicographically smallest sorted edge-mask tuple
over the leaves of an individualization-refinement search tree. Twins are
never branched on twice, which keeps complete, edgeless and Turán-like hosts
cheap.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graphs import Hypergraph, bits, mask_of


def _links(h: Hypergraph) -> list[set[int]]:
    links: list[set[int]] = [set() for _ in range(h.n)]
    for e in h.edges:
        for v in bits(e):
            links[v].add(e ^ (1 << v))
    return links


def are_twins(h: Hypergraph, u: int, v: int, links=None) -> bool:
    if u == v:
        return True
    if h.p == 2:
        rows = h.rows
        return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)
    links = links or _links(h)
    bu, bv = 1 << u, 1 << v
    return {s for s in links[u] if not s & bv} == {s for s in links[v] if not s & bu}


def twin_classes(h: Hypergraph) -> list[list[int]]:
    """Partition of the vertices into twin classes, ordered by least member."""
    links = None if h.p == 2 else _links(h)
    classes: list[list[int]] = []
    for v in range(h.n):
        for cls in classes:
            if are_twins(h, cls[0], v, links):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


class _Refiner:
    def __init__(self, h: Hypergraph):
        self.h = h
        self.n = h.n
        if h.p == 2:
            self.nbrs = [bits(r) for r in h.rows]
            self.incident = None
        else:
            self.nbrs = None
            inc: list[list[list[int]]] = [[] for _ in range(h.n)]
            for e in h.edges:
                vs = bits(e)
                for v in vs:
                    inc[v].append([w for w in vs if w != v])
            self.incident = inc
        twin_of = list(range(h.n))
        for cls in twin_classes(h):
            for v in cls:
                twin_of[v] = cls[0]
        self.twin_of = twin_of

    def refine(self, colors: list[int]) -> list[int]:
        """Equitable refinement; colors stay consistent with the input order."""
        n = self.n
        ncolors = len(set(colors))
        while True:
            if self.nbrs is not None:
                sigs = [(colors[v], tuple(sorted(colors[w] for w in self.nbrs[v]))) for v in range(n)]
            else:
                sigs = [
                    (colors[v], tuple(sorted(tuple(sorted(colors[w] for w in rest)) for rest in self.incident[v])))
                    for v in range(n)
                ]
            rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
            colors = [rank[s] for s in sigs]
            if len(rank) == ncolors:
                return colors
            ncolors = len(rank)

    def leaf_form(self, colors: list[int]) -> tuple[int, ...]:
        return tuple(sorted(mask_of(colors[v] for v in bits(e)) for e in self.h.edges))


def canonical_labeling(h: Hypergraph, colors: Optional[Sequence[int]] = None) -> tuple[tuple, list[int]]:
    """Return ``(form, labeling)`` where ``labeling[v]`` is the canonical index of ``v``.

    ``colors`` optionally fixes an initial vertex coloring that isomorphisms
    must respect; the colors then become part of the form.
    """
    ref = _Refiner(h)
    init = [0] * h.n if colors is None else list(colors)
    best: list = [None, None]

    def search(cols: list[int]) -> None:
        cols = ref.refine(cols)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(cols):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            form = ref.leaf_form(cols)
            if best[0] is None or form < best[0]:
                best[0], best[1] = form, cols
            return
        seen_twins = set()
        for v in target:
            tw = ref.twin_of[v]
            if tw in seen_twins:
                continue
            seen_twins.add(tw)
            search([2 * c + (0 if u == v else 1) for u, c in enumerate(cols)])

    search(init)
    labeling = best[1] if best[1] is not None else []
    color_key = ()
    if colors is not None:
        by_pos = [0] * h.n
        for v, pos in enumerate(labeling):
            by_pos[pos] = colors[v]
        color_key = tuple(by_pos)
    form = (h.n, h.p, best[0] if best[0] is not None else (), color_key)
    return form, labeling


def canonical_form(h: Hypergraph, colors: Optional[Sequence[int]] = None) -> tuple:
    return canonical_labeling(h, colors)[0]


def canonical_hypergraph(h: Hypergraph) -> Hypergraph:
    form, _ = canonical_labeling(h)
    return Hypergraph(h.n, h.p, form[2])


def from_form(form: tuple) -> Hypergraph:
    n, p, edges, _ = form
    return Hypergraph(n, p, edges)
