"""Covers of uniform set families with bounded matching number, and rainbow matchings.

A family with no ``t`` pairwise disjoint members admits a pair ``(A, B)`` with
``|A| <= t - 1`` and ``|B| <= r(2t - 2)`` such that every member meets ``A``
or has at least two elements in ``B``. :func:`cover_decomposition` builds one
by the greedy exchange procedure: start from a maximum packing, repeatedly add
a member touching the accumulated union in a single vertex, and stop at the
first exit that certifies a cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exceptions import PreconditionError
from .graphs import bits, mask_of


@dataclass(frozen=True)
class SetFamily:
    """``r``-uniform family of subsets of ``range(n)``, stored as bitmasks."""

    n: int
    r: int
    sets: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        for s in self.sets:
            if s & ~full:
                raise ValueError(f"member {bits(s)} has an element outside [0, {self.n})")
            if s.bit_count() != self.r:
                raise ValueError(f"member {bits(s)} does not have exactly {self.r} elements")
        ordered = tuple(sorted(set(self.sets), key=bits))
        if len(ordered) != len(self.sets):
            raise ValueError("duplicate member")
        object.__setattr__(self, "sets", ordered)

    @classmethod
    def from_lists(cls, n: int, r: int, sets: Sequence[Sequence[int]]) -> "SetFamily":
        return cls(n, r, tuple(mask_of(s) for s in sets))

    def as_lists(self) -> list[list[int]]:
        return [bits(s) for s in self.sets]


@dataclass(frozen=True)
class CoverPair:
    A: frozenset
    B: frozenset

    def as_dict(self) -> dict:
        return {"A": sorted(self.A), "B": sorted(self.B)}


def _first_packing(sets: Sequence[int], size: int) -> Optional[list[int]]:
    """Lexicographically first ``size`` pairwise disjoint members, by index."""
    chosen: list[int] = []

    def rec(start: int, used: int) -> bool:
        if len(chosen) == size:
            return True
        for i in range(start, len(sets) - (size - len(chosen)) + 1):
            if not sets[i] & used:
                chosen.append(i)
                if rec(i + 1, used | sets[i]):
                    return True
                chosen.pop()
        return False

    return [sets[i] for i in chosen] if rec(0, 0) else None


def matching_number(family: SetFamily, cap: int) -> int:
    """``min(cap, nu)`` where ``nu`` is the maximum number of pairwise disjoint members."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    sets = family.sets
    r = max(family.r, 1)
    best = 0

    def rec(start: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if best >= cap:
            return
        free = family.n - used.bit_count()
        if count + free // r <= best:
            return
        for i in range(start, len(sets)):
            if not sets[i] & used:
                rec(i + 1, used | sets[i], count + 1)
                if best >= cap:
                    return

    rec(0, 0, 0)
    return min(best, cap)


def verify_cover(family: SetFamily, t: int, pair: CoverPair) -> bool:
    """Check the size bounds and that every member meets ``A`` or has two elements in ``B``."""
    if len(pair.A) > t - 1 or len(pair.B) > family.r * (2 * t - 2):
        return False
    a, b = mask_of(pair.A), mask_of(pair.B)
    return all(s & a or (s & b).bit_count() >= 2 for s in family.sets)


def _pair(a_vertices, b_mask: int) -> CoverPair:
    return CoverPair(frozenset(a_vertices), frozenset(bits(b_mask)))


def cover_decomposition(family: SetFamily, t: int) -> CoverPair:
    """Build a cover pair for a family without ``t`` pairwise disjoint members.

    Raises :class:`PreconditionError` carrying ``t`` disjoint members when the
    family has them.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    sets = family.sets
    packing = _first_packing(sets, t)
    if packing is not None:
        raise PreconditionError(f"family contains {t} pairwise disjoint members", [bits(s) for s in packing])
    if not sets:
        return _pair((), 0)
    if t == 1:
        raise AssertionError("non-empty family always has one disjoint member")
    packing = _first_packing(sets, t - 1)
    if packing is None:
        return cover_decomposition(family, t - 1)

    base = list(packing)  # H_1..H_{t-1}; reordered so that u_i lies in base[i]
    primes: list[int] = []  # H'_1..H'_i
    us: list[int] = []  # u_1..u_i
    union = mask_of(v for s in base for v in bits(s))

    while len(us) < t - 1:
        if all((s & union).bit_count() >= 2 for s in sets):
            return _pair((), union)
        u_mask = mask_of(us)
        if us and all(s & u_mask for s in sets):
            return _pair(us, 0)
        i = len(us)
        candidate = next(
            (s for s in sets if (s & union).bit_count() == 1 and not s & union & u_mask),
            None,
        )
        if candidate is None:
            # every member with a single vertex in the union hits some u_j
            return _pair(us, union)
        u = (candidate & union).bit_length() - 1
        j = next(k for k in range(i, t - 1) if base[k] >> u & 1)
        base[i], base[j] = base[j], base[i]
        primes.append(candidate)
        us.append(u)
        union |= candidate

    u_mask = mask_of(us)
    avoiders = [s for s in sets if not s & u_mask]
    if not avoiders:
        return _pair(us, 0)
    bound = family.r * (2 * t - 2)
    # an avoider meets both H_i and H'_i for some i; drop u_i and cover the
    # rest by H_i, H'_i and the avoider
    for avoider in avoiders:
        for i in range(t - 1):
            if avoider & base[i] and avoider & primes[i]:
                pair = _pair(us[:i] + us[i + 1:], base[i] | primes[i] | avoider)
                if verify_cover(family, t, pair):
                    return pair
    # the three-set cover can fail; try covering the members that dodge the
    # smaller A by their own union
    for i in range(t - 1):
        rest = us[:i] + us[i + 1:]
        rest_mask = mask_of(rest)
        b_mask = mask_of(v for s in sets if not s & rest_mask for v in bits(s))
        if b_mask.bit_count() <= bound:
            return _pair(rest, b_mask)
    return _pair(us, union)


def rainbow_matching(matchings: Sequence[SetFamily], t: int) -> Optional[list[tuple[int, list[int]]]]:
    """``t`` pairwise disjoint members taken from ``t`` distinct matchings, if any."""
    if t < 0:
        raise ValueError("t must be non-negative")
    for idx, m in enumerate(matchings):
        used = 0
        for s in m.sets:
            if s & used:
                raise PreconditionError(f"input family {idx} is not a matching")
            used |= s
    picks: list[tuple[int, int]] = []

    def rec(start: int, used: int) -> bool:
        if len(picks) == t:
            return True
        for mi in range(start, len(matchings) - (t - len(picks)) + 1):
            for s in matchings[mi].sets:
                if not s & used:
                    picks.append((mi, s))
                    if rec(mi + 1, used | s):
                        return True
                    picks.pop()
        return False

    if not rec(0, 0):
        return None
    return [(mi, bits(s)) for mi, s in picks]
