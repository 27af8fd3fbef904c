"""The growth exponent b(H, t, r) from partial blowups."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .canon import canonical_form
from .counting import MAX_PATTERN_VERTICES, find_disjoint_cliques
from .exceptions import PatternTooLarge
from .graphs import GraphLike, Hypergraph, as_hypergraph, induced, partial_blowup


@dataclass(frozen=True)
class BlowupCertificate:
    """``U`` keeps the blowup free; every larger ``W`` gets a packing witness."""

    U: tuple[int, ...]
    witnesses: dict = field(default_factory=dict)  # W -> t disjoint r-sets in the (m, W)-blowup


@dataclass(frozen=True)
class BlowupResult:
    b: int
    certificate: Optional[BlowupCertificate]
    saturated: bool = False  # the pattern itself already contains tK_r^p
    multiplicity: int = 0


class _BlowupOracle:
    """Cached containment test for partial blowups of one pattern.

    Isomorphic (pattern, U) pairs have isomorphic blowups, so the cache key is
    the canonical form of the pattern with ``U`` as a vertex color.
    """

    def __init__(self, h: Hypergraph, t: int, r: int, m: int):
        self.h, self.t, self.r, self.m = h, t, r, m
        self.cache: dict = {}

    def packing(self, U: tuple[int, ...]):
        blown = partial_blowup(self.h, U, self.m)
        return find_disjoint_cliques(blown, self.t, self.r)

    def contains(self, U: tuple[int, ...]) -> bool:
        in_u = set(U)
        key = canonical_form(self.h, [1 if v in in_u else 0 for v in range(self.h.n)])
        if key not in self.cache:
            self.cache[key] = self.packing(U) is not None
        return self.cache[key]


def b_parameter(h: GraphLike, t: int, r: int, m: Optional[int] = None) -> BlowupResult:
    """Largest ``|U|`` whose partial ``(m, U)``-blowup has no ``t`` disjoint ``r``-cliques.

    ``m`` defaults to ``t``. Sizes are tried from ``|V(H)|`` downwards and the
    lexicographically first feasible ``U`` of the winning size is returned. If
    ``H`` itself contains the packing, ``b`` is reported as ``-1`` with
    ``saturated=True``.
    """
    h = as_hypergraph(h)
    if h.n > MAX_PATTERN_VERTICES:
        raise PatternTooLarge(f"pattern has {h.n} vertices; the cap is {MAX_PATTERN_VERTICES}")
    if t < 1:
        raise ValueError("t must be at least 1")
    if r < h.p:
        raise ValueError(f"r={r} is below the uniformity p={h.p}")
    m = t if m is None else m
    if m < 1:
        raise ValueError("blowup multiplicity must be at least 1")
    oracle = _BlowupOracle(h, t, r, m)
    if oracle.contains(()):
        return BlowupResult(-1, None, saturated=True, multiplicity=m)
    for size in range(h.n, -1, -1):
        for U in combinations(range(h.n), size):
            if not oracle.contains(U):
                witnesses = {}
                if size < h.n:
                    for W in combinations(range(h.n), size + 1):
                        witnesses[W] = oracle.packing(W)
                return BlowupResult(size, BlowupCertificate(U, witnesses), multiplicity=m)
    raise AssertionError("the empty set is always feasible here")


def verify_certificate(h: GraphLike, t: int, r: int, result: BlowupResult) -> bool:
    """Re-check a certificate from scratch."""
    h = as_hypergraph(h)
    if result.saturated:
        return find_disjoint_cliques(h, t, r) is not None
    cert = result.certificate
    m = result.multiplicity
    if len(cert.U) != result.b or find_disjoint_cliques(partial_blowup(h, cert.U, m), t, r) is not None:
        return False
    if result.b == h.n:
        return True
    expected = set(combinations(range(h.n), result.b + 1))
    if set(cert.witnesses) != expected:
        return False
    for W, packing in cert.witnesses.items():
        blown = partial_blowup(h, W, m)
        if packing is None or len(packing) != t:
            return False
        seen = set()
        for clique in packing:
            if len(clique) != r or seen & set(clique):
                return False
            seen |= set(clique)
            if find_disjoint_cliques(induced(blown, clique), 1, r) is None:
                return False
    return True
