from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from keypoly.compositions import (
    INFINITY,
    KM_PATTERNS,
    avoids_km,
    compositions_grid,
    contains_pattern,
    dominance_leq,
    find_pattern,
    flat,
    left_swaps,
    lswap_closure,
    parse_composition,
    part,
    qlswap,
    rmin_rmax_flex,
    segment_decomposition,
)

PAPER_ALPHA = (10, 5, 12, 9, 8, 8, 4, 2, 5, 1, 3)


def standardize(seq):
    """Rank of each value among the distinct values of seq."""
    ranks = {v: r for r, v in enumerate(sorted(set(seq)))}
    return [ranks[v] for v in seq]


def brute_contains(alpha, beta):
    """Containment via equal standardizations and elementwise gap dominance."""
    k = len(beta)
    for idx in combinations(range(len(alpha)), k):
        sub = [alpha[i] for i in idx]
        if standardize(sub) != standardize(beta):
            continue
        if all(abs(sub[s] - sub[t]) >= abs(beta[s] - beta[t]) for s in range(k) for t in range(s + 1, k)):
            return True
    return False


def brute_closure(alpha):
    seen = set()
    stack = [tuple(alpha)]
    while stack:
        g = stack.pop()
        if g in seen:
            continue
        seen.add(g)
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                if g[i] < g[j]:
                    h = list(g)
                    h[i], h[j] = h[j], h[i]
                    stack.append(tuple(h))
    return seen


class TestParse:
    @pytest.mark.parametrize("text", ["0,2,1,2", "[0,2,1,2]", " 0, 2 ,1,2 "])
    def test_accepts(self, text):
        assert parse_composition(text) == (0, 2, 1, 2)

    @pytest.mark.parametrize(
        "text, where",
        [("0,-1,2", "position 3"), ("0,1.5", "position 3"), ("a", "position 1"), ("1,,2", "position 3")],
    )
    def test_rejects_with_position(self, text, where):
        with pytest.raises(ValueError, match=where):
            parse_composition(text)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            parse_composition("[]")


class TestPatterns:
    def test_paper_example_positions(self):
        assert contains_pattern((0, 2, 1, 2), (0, 1, 2))
        assert find_pattern((0, 2, 1, 2), (0, 1, 2)) == (1, 3, 4)

    def test_paper_avoiding_example(self):
        assert not contains_pattern((0, 1, 1), (0, 1, 2))

    def test_identity_embedding(self):
        assert contains_pattern((5, 5), (5, 5))

    def test_gap_condition(self):
        assert brute_contains((0, 1, 2), (0, 2, 4)) is False
        assert not contains_pattern((0, 1, 2), (0, 2, 4))

    def test_longer_pattern_is_not_contained(self):
        assert not contains_pattern((1, 2), (0, 1, 2))

    def test_equal_pattern_values_force_equal_parts(self):
        assert not contains_pattern((0, 1), (0, 0))
        assert contains_pattern((3, 3), (0, 0))

    @pytest.mark.parametrize(
        "alpha, expected",
        [((0, 1, 1), True), ((0, 2, 1, 2), False), ((3, 2, 1, 3, 2), True)],
    )
    def test_avoids_km(self, alpha, expected):
        assert avoids_km(alpha) is expected
        assert expected is not any(brute_contains(alpha, p) for p in KM_PATTERNS)

    def test_matches_brute_force(self):
        patterns = [b for k in (1, 2, 3) for b in compositions_grid(k, 2)] + list(KM_PATTERNS)
        for alpha in compositions_grid(4, 3):
            for beta in patterns:
                assert contains_pattern(alpha, beta) == brute_contains(alpha, beta), (alpha, beta)

    def test_containment_is_transitive(self):
        patterns = [b for k in (1, 2, 3) for b in compositions_grid(k, 2)]
        below = {b: [g for g in patterns if contains_pattern(b, g)] for b in patterns}
        for alpha in compositions_grid(5, 3):
            contained = {b for b in patterns if contains_pattern(alpha, b)}
            for b in contained:
                assert set(below[b]) <= contained, (alpha, b)

    def test_km_avoidance_is_shift_invariant(self):
        for alpha in compositions_grid(5, 3):
            assert avoids_km(alpha) == avoids_km(tuple(a + 1 for a in alpha))


class TestSimpleOps:
    @pytest.mark.parametrize(
        "alpha, expected",
        [((1, 0, 2, 0), (1, 2)), ((3, 2, 1, 3, 2), (3, 2, 1, 3, 2)), ((0, 0, 0), ())],
    )
    def test_flat(self, alpha, expected):
        assert flat(alpha) == expected

    @pytest.mark.parametrize(
        "a, b, expected",
        [((1, 2), (2, 1), True), ((2, 1), (1, 2), False), ((1, 1, 1), (1, 1, 1), True)],
    )
    def test_dominance(self, a, b, expected):
        assert dominance_leq(a, b) is expected

    def test_dominance_length_mismatch(self):
        with pytest.raises(ValueError):
            dominance_leq((1,), (1, 0))

    def test_sentinels(self):
        assert part((1, 2), 0) == INFINITY
        assert part((1, 2), 3) == 0
        with pytest.raises(IndexError):
            part((1, 2), 4)


class TestLeftSwaps:
    def test_single_ascent(self):
        assert left_swaps((0, 1)) == {(1, 0)}

    def test_decreasing(self):
        assert left_swaps((2, 1)) == set()

    def test_paper_alpha_neighbourhood(self):
        # ascending pairs (2,4), (3,4), (3,5): three distinct neighbours
        assert left_swaps((3, 2, 1, 3, 2)) == {(3, 3, 1, 2, 2), (3, 2, 3, 1, 2), (3, 2, 2, 3, 1)}

    def test_paper_closure(self):
        expected = {
            (3, 2, 1, 3, 2), (3, 3, 1, 2, 2), (3, 2, 3, 1, 2), (3, 2, 2, 3, 1),
            (3, 3, 2, 1, 2), (3, 3, 2, 2, 1), (3, 2, 3, 2, 1),
        }
        closure = lswap_closure((3, 2, 1, 3, 2))
        assert len(closure) == 7
        assert set(closure) == expected
        assert closure == sorted(closure)

    def test_small_closures(self):
        assert lswap_closure((2, 1)) == [(2, 1)]
        assert len(brute_closure((0, 1, 2))) == 6
        assert set(lswap_closure((0, 1, 2))) == brute_closure((0, 1, 2))

    def test_closure_invariants(self):
        for alpha in compositions_grid(4, 3):
            closure = set(lswap_closure(alpha))
            assert closure == brute_closure(alpha)
            assert alpha in closure
            for gamma in closure:
                assert sorted(gamma) == sorted(alpha)
                assert set(lswap_closure(gamma)) <= closure


class TestQlswap:
    def test_paper_alpha(self):
        assert qlswap((3, 2, 1, 3, 2)) == lswap_closure((3, 2, 1, 3, 2))

    def test_zero_free_is_whole_closure(self):
        for alpha in compositions_grid(4, 3, min_part=1):
            assert qlswap(alpha) == lswap_closure(alpha)

    def test_literal_definition_with_zero(self):
        # closure {(0,1),(1,0)}, one flattening class; (0,1) <=_Dom (1,0) but not conversely
        assert qlswap((0, 1)) == [(0, 1)]

    def test_brute_force_definition(self):
        for alpha in compositions_grid(4, 2):
            closure = brute_closure(alpha)
            expected = sorted(
                g for g in closure
                if all(dominance_leq(g, t) for t in closure if flat(t) == flat(g))
            )
            assert qlswap(alpha) == expected


class TestSegments:
    def test_paper_example(self):
        dec = segment_decomposition(PAPER_ALPHA)
        assert dec.ascents == (3, 9, 11)
        assert [s.indices for s in dec.segments] == [(1, 2), (3, 4, 5, 6, 7, 8), (9, 10), (11,)]
        parts = [(s.seg1, s.seg2, s.seg3) for s in dec.segments]
        assert parts == [
            ((), (1,), (2,)),
            ((3, 4, 5, 6), (7,), (8,)),
            ((9,), (), (10,)),
            ((11,), (), ()),
        ]

    def test_decreasing_has_one_segment(self):
        dec = segment_decomposition((4, 3, 3, 1, 0))
        assert dec.k == 0
        assert dec.segments[0].indices == (1, 2, 3, 4, 5)

    def test_two_parts(self):
        dec = segment_decomposition((1, 2))
        assert dec.ascents == (2,)
        assert [s.indices for s in dec.segments] == [(1,), (2,)]

    def test_segments_partition_indices(self):
        for alpha in compositions_grid(5, 3):
            dec = segment_decomposition(alpha)
            flat_indices = [b for s in dec.segments for b in s.indices]
            assert flat_indices == list(range(1, 6))
            for m, s in enumerate(dec.segments, start=1):
                expected = () if m == dec.k + 1 else (s.stop - 1,)
                assert s.seg3 == expected


class TestFlex:
    def test_paper_example(self):
        assert rmin_rmax_flex(PAPER_ALPHA, 5) == (2, 6, 2)

    def test_equal_pair(self):
        assert rmin_rmax_flex((1, 1), 1) == (1, 2, 0)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            rmin_rmax_flex((1, 1), 3)

    @given(st.lists(st.integers(0, 6), min_size=1, max_size=7))
    def test_decreasing_has_no_flex(self, parts):
        alpha = tuple(sorted(parts, reverse=True))
        for b in range(1, len(alpha) + 1):
            assert rmin_rmax_flex(alpha, b)[2] == 0
