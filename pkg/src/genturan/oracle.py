"""Exhaustive computation of ex(n, H, tK_r^p) on small hosts.

Two enumeration routes are available:

``raw``
    Depth-first search over all labeled edge subsets. Every ``t``-tuple of
    disjoint ``r``-sets is precompiled into the edge mask it needs, and a
    branch is cut as soon as one of these masks is fully present. Pattern
    copies are counted against precompiled copy masks as well, so this route
    never calls the counting module.

``dedup``
    Isomorph-free generation by adding one vertex at a time and keeping one
    canonical representative per class. Packing-freeness is inherited by
    induced subgraphs, so non-free hosts are dropped at every level.

Work is split into deterministic shards; results do not depend on the number
of workers.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterator, Optional, Sequence

from .canon import canonical_form, from_form
from .counting import count_cliques, count_copies, find_disjoint_cliques, iter_embeddings
from .exceptions import GuardError, PreconditionError
from .formulas import ProblemParams, ex_closed_value
from .graphs import GraphLike, Hypergraph, as_hypergraph, bits, mask_of

RAW_ENUMERATION_MAX_EDGES = 30
RAW_SEARCH_MAX_N = {2: 8, 3: 6}
DEDUP_MAX_N = {2: 8, 3: 6}
DEFAULT_WITNESS_CAP = 16


@dataclass
class OracleResult:
    """Extremal value over the scanned hosts plus extremal witnesses.

    ``value`` is ``None`` when no host satisfies the constraints. ``scanned``
    counts hosts whose pattern count was evaluated (free hosts, or free
    classes in dedup mode); ``pruned`` counts search branches cut by the
    packing test.
    """

    value: Optional[int]
    witnesses: list[Hypergraph]
    scanned: int
    pruned: int
    elapsed: float
    mode: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class UniversalVertices:
    """Host constraint: at least ``k`` vertices lie in every possible hyperedge through them."""

    k: int

    def __call__(self, h: Hypergraph) -> bool:
        return len(universal_vertices(h)) >= self.k


def universal_vertices(h: Hypergraph) -> list[int]:
    full_degree = comb(h.n - 1, h.p - 1) if h.n else 0
    deg = [0] * h.n
    for e in h.edges:
        for v in bits(e):
            deg[v] += 1
    return [v for v in range(h.n) if deg[v] == full_degree]


@dataclass(frozen=True)
class _PackingFree:
    t: int
    r: int

    def __call__(self, h: Hypergraph) -> bool:
        return find_disjoint_cliques(h, self.t, self.r) is None


def _check_guard(n: int, p: int, limits: dict, what: str, override: bool) -> None:
    limit = limits.get(p)
    if limit is None:
        ok = comb(n, p) <= 20
    else:
        ok = n <= limit
    if not ok and not override:
        raise GuardError(f"{what} for n={n}, p={p} exceeds the size guard (pass override_guards to force)")


def _resolve_mode(mode: str, p: int) -> str:
    if mode == "auto":
        return "dedup" if p == 2 else "raw"
    if mode not in ("raw", "dedup"):
        raise ValueError(f"unknown enumeration mode {mode!r}")
    return mode


def _map(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def _chunks(items: Sequence, count: int) -> list[list]:
    count = max(1, min(count, len(items)))
    return [list(items[i::count]) for i in range(count)]


# --- isomorph-free generation ----------------------------------------------


def _expand(job) -> tuple[set, int]:
    forms, k, p, keep = job
    links = [mask_of(c) | (1 << (k - 1)) for c in combinations(range(k - 1), p - 1)]
    out: set = set()
    rejected = 0
    for form in forms:
        parent = form[2]
        for sub in range(1 << len(links)):
            child = Hypergraph(k, p, parent + tuple(links[i] for i in bits(sub)))
            if keep is not None and not keep(child):
                rejected += 1
                continue
            out.add(canonical_form(child))
    return out, rejected


def generate_classes(n: int, p: int, keep=None, workers: int = 1) -> tuple[list[tuple], int]:
    """Canonical forms of all ``n``-vertex ``p``-graphs (passing ``keep``), sorted.

    ``keep`` must be inherited by induced sub-hypergraphs, otherwise classes
    are lost. Returns the forms and the number of rejected candidates.
    """
    level = [(0, p, (), ())]
    rejected = 0
    for k in range(1, n + 1):
        jobs = [(chunk, k, p, keep) for chunk in _chunks(level, workers * 4)]
        merged: set = set()
        for forms, rej in _map(_expand, jobs, workers):
            merged |= forms
            rejected += rej
        level = sorted(merged)
    return level, rejected


def enumerate_hosts(n: int, p: int, mode: str = "raw", override_guards: bool = False) -> Iterator[Hypergraph]:
    """All ``2^C(n,p)`` labeled hosts (raw) or one per isomorphism class (dedup)."""
    if mode == "raw":
        if comb(n, p) > RAW_ENUMERATION_MAX_EDGES and not override_guards:
            raise GuardError(f"raw enumeration of {p}-graphs on {n} vertices exceeds 2^{RAW_ENUMERATION_MAX_EDGES} hosts")
        all_edges = [mask_of(c) for c in combinations(range(n), p)]
        for sub in range(1 << len(all_edges)):
            yield Hypergraph(n, p, tuple(all_edges[i] for i in bits(sub)))
    elif mode == "dedup":
        _check_guard(n, p, DEDUP_MAX_N, "dedup enumeration", override_guards)
        forms, _ = generate_classes(n, p)
        for form in forms:
            yield from_form(form)
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")


# --- raw search ------------------------------------------------------------


def _forbidden_masks(n: int, p: int, t: int, r: int, edge_index: dict) -> list[int]:
    """Edge masks of every placement of ``t`` disjoint ``r``-cliques."""
    rsets = list(combinations(range(n), r))
    need = []
    for rs in rsets:
        m = 0
        for e in combinations(rs, p):
            m |= 1 << edge_index[mask_of(e)]
        need.append((mask_of(rs), m))
    out = []

    def rec(start: int, used: int, acc: int, left: int):
        if left == 0:
            out.append(acc)
            return
        for i in range(start, len(need)):
            vm, em = need[i]
            if not vm & used:
                rec(i + 1, used | vm, acc | em, left - 1)

    rec(0, 0, 0, t)
    return out


def _copy_masks(pattern: Hypergraph, n: int, edge_index: dict) -> list[int]:
    """Edge masks of all copies of ``pattern`` in the complete ``n``-vertex host.

    A copy is a (vertex set, edge set) pair; copies differing only in isolated
    vertices share an edge mask and appear once per vertex set.
    """
    complete = Hypergraph.complete(n, pattern.p)
    copies = set()
    for image in iter_embeddings(pattern, complete):
        em = 0
        for e in pattern.edges:
            em |= 1 << edge_index[mask_of(image[v] for v in bits(e))]
        copies.add((mask_of(image), em))
    return [em for _, em in sorted(copies)]


@dataclass(frozen=True)
class _RawTask:
    n: int
    p: int
    edges: tuple[int, ...]
    triggers: tuple[tuple[int, ...], ...]
    copies: tuple[int, ...]
    constraints: object
    prefix_len: int
    prefix: int


def _raw_shard(task: _RawTask) -> tuple[Optional[int], list[int], int, int]:
    E = len(task.edges)
    triggers, copies = task.triggers, task.copies
    best: list = [None, []]
    stats = [0, 0]  # scanned, pruned

    for i in range(task.prefix_len):
        if task.prefix >> i & 1:
            for cfg in triggers[i]:
                if cfg & task.prefix == cfg:
                    return None, [], 0, 1

    def leaf(host: int) -> None:
        if task.constraints is not None:
            h = Hypergraph(task.n, task.p, tuple(task.edges[i] for i in bits(host)))
            if not task.constraints(h):
                return
        stats[0] += 1
        value = 0
        for c in copies:
            if c & host == c:
                value += 1
        if best[0] is None or value > best[0]:
            best[0], best[1] = value, [host]
        elif value == best[0]:
            best[1].append(host)

    def dfs(i: int, host: int) -> None:
        if i == E:
            leaf(host)
            return
        dfs(i + 1, host)
        grown = host | (1 << i)
        for cfg in triggers[i]:
            if cfg & grown == cfg:
                stats[1] += 1
                return
        dfs(i + 1, grown)

    dfs(task.prefix_len, task.prefix)
    return best[0], best[1], stats[0], stats[1]


def _raw_search(n, pattern, t, r, constraints, workers):
    p = pattern.p
    edges = tuple(mask_of(c) for c in combinations(range(n), p))
    edge_index = {e: i for i, e in enumerate(edges)}
    triggers: list[list[int]] = [[] for _ in edges]
    for cfg in _forbidden_masks(n, p, t, r, edge_index):
        triggers[cfg.bit_length() - 1].append(cfg)
    copies = tuple(_copy_masks(pattern, n, edge_index)) if pattern.n <= n else ()
    prefix_len = 0
    while workers > 1 and (1 << prefix_len) < 4 * workers and prefix_len < len(edges):
        prefix_len += 1
    tasks = [
        _RawTask(n, p, edges, tuple(tuple(x) for x in triggers), copies, constraints, prefix_len, pre)
        for pre in range(1 << prefix_len)
    ]
    best = None
    labeled: set = set()
    scanned = pruned = 0
    for value, hosts, sc, pr in _map(_raw_shard, tasks, workers):
        scanned += sc
        pruned += pr
        if value is None:
            continue
        if best is None or value > best:
            best, labeled = value, set(hosts)
        elif value == best:
            labeled.update(hosts)
    forms = {canonical_form(Hypergraph(n, p, tuple(edges[i] for i in bits(h)))) for h in labeled}
    return best, sorted(forms), scanned, pruned


# --- dedup search ----------------------------------------------------------


def _evaluate(job) -> tuple[Optional[int], list, int]:
    forms, pattern, constraints = job
    best = None
    winners: list = []
    scanned = 0
    for form in forms:
        host = from_form(form)
        if constraints is not None and not constraints(host):
            continue
        scanned += 1
        value = count_copies(pattern, host)
        if best is None or value > best:
            best, winners = value, [form]
        elif value == best:
            winners.append(form)
    return best, winners, scanned


def _dedup_search(n, pattern, t, r, constraints, workers):
    forms, rejected = generate_classes(n, pattern.p, _PackingFree(t, r), workers)
    jobs = [(chunk, pattern, constraints) for chunk in _chunks(forms, workers * 4)]
    best = None
    winners: list = []
    scanned = 0
    for value, wins, sc in _map(_evaluate, jobs, workers):
        scanned += sc
        if value is None:
            continue
        if best is None or value > best:
            best, winners = value, list(wins)
        elif value == best:
            winners.extend(wins)
    return best, sorted(winners), scanned, rejected


def brute_force_ex(
    n: int,
    pattern: GraphLike,
    t: int,
    r: int,
    constraints: Optional[Callable[[Hypergraph], bool]] = None,
    mode: str = "auto",
    workers: int = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    override_guards: bool = False,
) -> OracleResult:
    """Maximum number of copies of ``pattern`` over ``n``-vertex tK_r^p-free hosts.

    ``constraints`` filters hosts further (e.g. :class:`UniversalVertices`);
    with ``workers > 1`` it must be picklable. ``mode`` is ``raw``,
    ``dedup`` or ``auto`` (dedup for graphs, raw otherwise). Witnesses are
    canonical representatives of the extremal classes, at most
    ``witness_cap`` of them, in canonical order.
    """
    pattern = as_hypergraph(pattern)
    p = pattern.p
    if t < 1:
        raise ValueError("t must be at least 1")
    if r < p:
        raise ValueError(f"r={r} is below the uniformity p={p}")
    if n < 0:
        raise ValueError("n must be non-negative")
    mode = _resolve_mode(mode, p)
    start = time.perf_counter()
    if mode == "raw":
        _check_guard(n, p, RAW_SEARCH_MAX_N, "raw search", override_guards)
        value, forms, scanned, pruned = _raw_search(n, pattern, t, r, constraints, workers)
    else:
        _check_guard(n, p, DEDUP_MAX_N, "dedup search", override_guards)
        value, forms, scanned, pruned = _dedup_search(n, pattern, t, r, constraints, workers)
    elapsed = time.perf_counter() - start
    return OracleResult(
        value=value,
        witnesses=[from_form(f) for f in forms[:witness_cap]],
        scanned=scanned,
        pruned=pruned,
        elapsed=elapsed,
        mode=mode,
        params={"n": n, "t": t, "r": r, "p": p},
    )


def search_tail_T(m: int, x: int, p: int, override_guards: bool = False) -> Hypergraph:
    """A K_{x+1}^p-free ``p``-graph on ``m`` vertices with the most copies of K_x^p.

    When ``x + 1 < p`` no hyperedge fits inside an ``(x+1)``-set, and the
    edgeless host is returned (the same convention as T(m, 0)).
    """
    if m < 0 or x < 0:
        raise ValueError("m and x must be non-negative")
    if x + 1 < p or m <= x:
        return Hypergraph.empty(m, p) if x + 1 < p else Hypergraph.complete(m, p)
    result = brute_force_ex(m, Hypergraph.complete(x, p), 1, x + 1, override_guards=override_guards)
    return result.witnesses[0]


# --- verification reports --------------------------------------------------


@dataclass
class ThresholdRow:
    n: int
    oracle: int
    formula: Optional[int]
    equal: bool
    witness: Hypergraph


@dataclass
class ThresholdReport:
    s: int
    r: int
    t: int
    rows: list[ThresholdRow]
    lower_bound_holds: bool
    equality_onset: Optional[int]
    elapsed: float


def verify_theorem1(
    n_range: Sequence[int], s: int, r: int, t: int, mode: str = "auto", workers: int = 1, override_guards: bool = False
) -> ThresholdReport:
    """Compare the oracle with the closed form for each ``n``.

    ``equality_onset`` is the least ``n`` in the range from which oracle and
    formula agree up to the end of the range (``None`` if they disagree at
    the last ``n``).
    """
    start = time.perf_counter()
    pattern = Hypergraph.complete(s, 2)
    rows = []
    for n in n_range:
        res = brute_force_ex(n, pattern, t, r, mode=mode, workers=workers, override_guards=override_guards)
        formula = ex_closed_value(ProblemParams(n, s, r, t))
        rows.append(ThresholdRow(n, res.value, formula, res.value == formula, res.witnesses[0]))
    onset = None
    for row in reversed(rows):
        if not row.equal:
            break
        onset = row.n
    return ThresholdReport(
        s, r, t, rows,
        lower_bound_holds=all(row.oracle >= row.formula for row in rows),
        equality_onset=onset,
        elapsed=time.perf_counter() - start,
    )


def verify_universal_vertices(n: int, pattern: GraphLike, t: int, r: int, **kwargs) -> bool:
    """Whether some extremal host has ``t - 1`` universal vertices.

    Compares the unconstrained optimum with the optimum over hosts that have
    at least ``t - 1`` universal vertices.
    """
    pattern = as_hypergraph(pattern)
    if t < 2:
        raise PreconditionError("needs t >= 2")
    if count_cliques(pattern, r):
        raise PreconditionError(f"pattern contains K_{r}")
    free = brute_force_ex(n, pattern, t, r, **kwargs)
    constrained = brute_force_ex(n, pattern, t, r, constraints=UniversalVertices(t - 1), **kwargs)
    return constrained.value is not None and constrained.value == free.value
