import itertools

import pytest
from hypothesis import given, strategies as st

from epos.compositions import (
    EQUAL,
    GREATER,
    LESS,
    alpha_compare,
    compositions_min2,
    compositions_path_support,
    first_odd,
    format_composition,
    last_odd,
    parse_composition,
    rotate_longest_odd_prefix,
    rotate_longest_odd_suffix,
    surplus,
    tail_even_length,
    underlying_partition,
    validate_composition,
    weight,
    weight_prime,
)


def brute_force_compositions(n):
    """Independent oracle: compositions of n from bar placements."""
    out = []
    for mask in range(1 << (n - 1)):
        parts = []
        prev = 0
        for pos in range(1, n):
            if mask >> (pos - 1) & 1:
                parts.append(pos - prev)
                prev = pos
        parts.append(n - prev)
        out.append(tuple(parts))
    return out


def min2_count_oracle(n):
    """Fibonacci-type recurrence a(n) = a(n-1) + a(n-2), a(2) = a(3) = 1."""
    a = {2: 1, 3: 1}
    for k in range(4, n + 1):
        a[k] = a[k - 1] + a[k - 2]
    return a[n]


compositions_strategy = st.lists(st.integers(1, 9), min_size=1, max_size=7).map(tuple)
min2_strategy = st.lists(st.integers(2, 9), min_size=1, max_size=7).map(tuple)


class TestEnumerators:
    def test_min2_smallest(self):
        assert list(compositions_min2(2)) == [(2,)]

    def test_min2_n6(self):
        got = set(compositions_min2(6))
        assert got == {(6,), (4, 2), (2, 4), (3, 3), (2, 2, 2)}
        assert len(list(compositions_min2(6))) == 5

    @pytest.mark.parametrize("n", range(2, 11))
    def test_min2_matches_brute_force(self, n):
        expected = {c for c in brute_force_compositions(n) if min(c) >= 2}
        assert set(compositions_min2(n)) == expected

    def test_min2_order_is_ascending_lex(self):
        for n in range(2, 12):
            got = list(compositions_min2(n))
            assert got == sorted(got)

    def test_min2_count_22(self):
        assert sum(1 for _ in compositions_min2(22)) == 10946
        assert min2_count_oracle(22) == 10946

    @pytest.mark.parametrize("n", range(4, 26))
    def test_min2_count_recurrence(self, n):
        count = sum(1 for _ in compositions_min2(n))
        assert count == min2_count_oracle(n)

    def test_min2_no_duplicates(self):
        for n in range(2, 15):
            items = list(compositions_min2(n))
            assert len(items) == len(set(items))

    def test_min2_domain_error(self):
        with pytest.raises(ValueError):
            list(compositions_min2(1))

    def test_min2_first_part_partitioning(self):
        full = list(compositions_min2(12))
        pieces = [list(compositions_min2(12, first_parts=fs)) for fs in ([2, 5], [3, 4], range(6, 13))]
        merged = sorted(itertools.chain.from_iterable(pieces))
        assert merged == sorted(full)

    def test_path_support_tiny(self):
        assert list(compositions_path_support(1)) == [(1,)]
        assert set(compositions_path_support(3)) == {(3,), (1, 2)}
        assert set(compositions_path_support(5)) == {(5,), (1, 4), (2, 3), (3, 2), (1, 2, 2)}

    @pytest.mark.parametrize("n", range(1, 11))
    def test_path_support_matches_weight_filter(self, n):
        expected = {c for c in brute_force_compositions(n) if weight(c) != 0}
        assert set(compositions_path_support(n)) == expected

    def test_path_support_domain_error(self):
        with pytest.raises(ValueError):
            list(compositions_path_support(0))


class TestSurplus:
    def test_zero_prefix(self):
        assert surplus((2, 2), 0) == 0

    def test_small(self):
        assert surplus((3, 2), 4) == 1

    def test_large_parts(self):
        assert surplus((18, 18, 3, 2, 2), 21) == 15

    def test_error_beyond_size(self):
        with pytest.raises(ValueError):
            surplus((3, 2), 6)

    @given(compositions_strategy, st.integers(0, 60))
    def test_zero_iff_prefix_sum(self, comp, a):
        if a > sum(comp):
            with pytest.raises(ValueError):
                surplus(comp, a)
            return
        prefix_sums = {0}
        acc = 0
        for p in comp:
            acc += p
            prefix_sums.add(acc)
        val = surplus(comp, a)
        assert val >= 0
        assert (val == 0) == (a in prefix_sums)


class TestWeights:
    def test_examples(self):
        assert weight((3,)) == 3
        assert weight((1, 2)) == 1
        assert weight((2, 1)) == 0
        assert weight_prime((4, 3, 2)) == 2
        assert weight((4, 3, 2)) == 8

    def test_empty_error(self):
        with pytest.raises(ValueError):
            weight(())
        with pytest.raises(ValueError):
            weight_prime(())

    @given(compositions_strategy)
    def test_zero_iff_late_unit_part(self, comp):
        assert (weight(comp) == 0) == (1 in comp[1:])

    @given(min2_strategy)
    def test_positive_on_min2(self, comp):
        assert weight(comp) > 0

    @given(min2_strategy, st.randoms())
    def test_tail_permutation_invariance(self, comp, rng):
        tail = list(comp[1:])
        rng.shuffle(tail)
        shuffled = (comp[0],) + tuple(tail)
        assert weight_prime(shuffled) == weight_prime(comp)
        assert weight(shuffled) == weight(comp)


class TestAlphaCompare:
    def test_examples(self):
        assert alpha_compare((3, 4), (3, 4)) == EQUAL
        assert alpha_compare((3, 4), (3, 2, 2)) == GREATER
        assert alpha_compare((2, 5), (3, 4)) == LESS

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            alpha_compare((2, 2), (3,))

    def test_total_order_on_c7(self):
        c7 = list(compositions_min2(7))
        assert len(c7) == 8
        for k in c7:
            assert alpha_compare(k, k) == EQUAL
        for k, l in itertools.product(c7, c7):
            cmp = alpha_compare(k, l)
            assert cmp == -alpha_compare(l, k)
            assert (cmp == EQUAL) == (k == l)
        for a, b, c in itertools.product(c7, repeat=3):
            if alpha_compare(a, b) >= 0 and alpha_compare(b, c) >= 0:
                assert alpha_compare(a, c) >= 0


class TestOddStructure:
    def test_first_last(self):
        assert first_odd((2, 3, 2, 6)) == 2
        assert last_odd((2, 3, 2, 6)) == 2
        assert first_odd((2, 4, 2)) is None
        assert last_odd((2, 4, 2)) is None
        assert first_odd((3, 4, 3, 3)) == 1
        assert last_odd((3, 4, 3, 3)) == 4

    def test_tail_even_length(self):
        assert tail_even_length((3, 4, 3, 3)) == 0
        assert tail_even_length((2, 3, 2, 6)) == 2
        assert tail_even_length((2, 4, 2)) == 3
        assert tail_even_length(()) == 0


class TestRotation:
    def test_examples(self):
        assert rotate_longest_odd_suffix((2, 3, 3, 5)) == (3, 3, 5, 2)
        assert rotate_longest_odd_suffix((2, 2, 3, 3, 3)) == (3, 3, 3, 2, 2)
        assert rotate_longest_odd_suffix((4, 2)) == (4, 2)

    def test_empty_error(self):
        with pytest.raises(ValueError):
            rotate_longest_odd_suffix(())
        with pytest.raises(ValueError):
            rotate_longest_odd_prefix(())

    def test_even_last_part_when_even_part_exists(self):
        for comp in compositions_min2(9):
            rotated = rotate_longest_odd_suffix(comp)
            if any(p % 2 == 0 for p in comp):
                assert rotated[-1] % 2 == 0

    @pytest.mark.parametrize("m", [2, 3])
    def test_bijection_on_head2(self, m):
        domain = [k for k in compositions_min2(2 * m + 1) if k[0] == 2]
        images = [rotate_longest_odd_suffix(k) for k in domain]
        assert len(set(images)) == len(domain)
        for k, u in zip(domain, images):
            assert rotate_longest_odd_prefix(u) == k
            assert underlying_partition(u) == underlying_partition(k)


class TestTextFormat:
    def test_roundtrip(self):
        comp = (18, 18, 3, 2, 2)
        assert format_composition(comp) == "18,18,3,2,2"
        assert parse_composition("18,18,3,2,2") == comp

    def test_malformed(self):
        with pytest.raises(ValueError):
            parse_composition("3,,2")
        with pytest.raises(ValueError):
            parse_composition("3,0,2")
        with pytest.raises(ValueError):
            parse_composition("a,b")

    def test_validate(self):
        assert validate_composition([3, 2]) == (3, 2)
        with pytest.raises(ValueError):
            validate_composition([3, -1])
