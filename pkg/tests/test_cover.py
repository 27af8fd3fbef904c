import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from genturan.cover import CoverPair, SetFamily, cover_decomposition, matching_number, rainbow_matching, verify_cover
from genturan.exceptions import PreconditionError

import naive


def random_family(rng, n, r, t, attempts):
    """Random r-uniform family on [n] grown while its matching number stays below t."""
    chosen = []
    for _ in range(attempts):
        s = sorted(rng.sample(range(n), r))
        if s in chosen:
            continue
        if matching_number(SetFamily.from_lists(n, r, chosen + [s]), t) < t:
            chosen.append(s)
    return SetFamily.from_lists(n, r, chosen)


def test_family_validation():
    with pytest.raises(ValueError):
        SetFamily.from_lists(4, 2, [[0, 1, 2]])
    with pytest.raises(ValueError):
        SetFamily.from_lists(3, 2, [[0, 3]])
    with pytest.raises(ValueError):
        SetFamily.from_lists(4, 2, [[0, 1], [1, 0]])
    assert SetFamily.from_lists(4, 2, [[2, 3], [0, 1]]).as_lists() == [[0, 1], [2, 3]]


def test_matching_number_against_naive():
    rng = random.Random(2)
    for _ in range(200):
        n, r = rng.randint(3, 9), rng.randint(1, 3)
        sets = {tuple(sorted(rng.sample(range(n), r))) for _ in range(rng.randint(0, 9))}
        fam = SetFamily.from_lists(n, r, sorted(sets))
        assert matching_number(fam, 99) == naive.matching_number(sets)


def test_star_and_triangle():
    star = SetFamily.from_lists(6, 2, [[0, 1], [0, 2], [0, 3], [0, 4]])
    pair = cover_decomposition(star, 2)
    assert verify_cover(star, 2, pair)
    tri = SetFamily.from_lists(3, 2, [[0, 1], [0, 2], [1, 2]])
    pair = cover_decomposition(tri, 2)
    assert pair == CoverPair(frozenset(), frozenset({0, 1, 2}))


def test_empty_family():
    assert cover_decomposition(SetFamily(5, 2, ()), 2) == CoverPair(frozenset(), frozenset())


def test_precondition_witness():
    fam = SetFamily.from_lists(6, 2, [[0, 1], [2, 3], [4, 5]])
    with pytest.raises(PreconditionError) as exc:
        cover_decomposition(fam, 2)
    assert exc.value.witness == [[0, 1], [2, 3]]


def test_family_that_defeats_three_set_cover():
    # the cover built from H_i, H'_i and one avoider misses {6,8,9} here
    fam = SetFamily.from_lists(
        10, 3, [[0, 1, 5], [0, 2, 4], [0, 2, 8], [0, 5, 9], [1, 3, 6], [2, 3, 8], [2, 4, 9], [5, 6, 7], [6, 8, 9]]
    )
    assert matching_number(fam, 3) < 3
    pair = cover_decomposition(fam, 3)
    assert verify_cover(fam, 3, pair)
    assert len(pair.A) < 2 or not pair.B


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([2, 3]), st.sampled_from([2, 3, 4]))
def test_cover_properties(seed, r, t):
    rng = random.Random(seed)
    n = rng.randint(r, 14)
    fam = random_family(rng, n, r, t, rng.randint(1, 30))
    pair = cover_decomposition(fam, t)
    assert verify_cover(fam, t, pair)
    assert len(pair.A) <= t - 1 and len(pair.B) <= r * (2 * t - 2)
    if len(pair.A) == t - 1:
        assert not pair.B


def test_rainbow_matching():
    ms = [
        SetFamily.from_lists(8, 2, [[0, 1], [2, 3]]),
        SetFamily.from_lists(8, 2, [[0, 2], [4, 5]]),
        SetFamily.from_lists(8, 2, [[6, 7]]),
    ]
    assert rainbow_matching(ms, 3) == [(0, [0, 1]), (1, [4, 5]), (2, [6, 7])]
    assert rainbow_matching(ms[1:], 3) is None
    assert rainbow_matching(ms[:2], 2) == [(0, [0, 1]), (1, [4, 5])]
    assert rainbow_matching([], 0) == []


def test_rainbow_rejects_non_matching():
    with pytest.raises(PreconditionError):
        rainbow_matching([SetFamily.from_lists(4, 2, [[0, 1], [1, 2]])], 1)


def test_rainbow_against_naive():
    rng = random.Random(8)
    for _ in range(150):
        n, r, k = rng.randint(4, 9), rng.randint(1, 3), rng.randint(1, 4)
        ms = []
        for _ in range(k):
            verts = rng.sample(range(n), (n // r) * r)
            size = rng.randint(0, n // r)
            ms.append(SetFamily.from_lists(n, r, [sorted(verts[i * r:(i + 1) * r]) for i in range(size)]))
        t = rng.randint(1, k)
        want = any(
            any(
                all(not set(a) & set(b) for a, b in combinations(pick, 2))
                for pick in product(*[ms[i].as_lists() for i in idxs])
            )
            for idxs in combinations(range(k), t)
        )
        got = rainbow_matching(ms, t)
        assert (got is not None) == want
