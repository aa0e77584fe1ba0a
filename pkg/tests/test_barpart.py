import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinblocks.barpart import (
    EMPTY,
    TYPE1,
    TYPE2,
    TYPE3,
    Bar,
    BarPartition,
    bar_core_and_weight,
    bars,
    enumerate_bar_partitions,
    format_partition,
    is_bar_core,
    labels_with_core_and_weight,
    make_bar_partition,
    parse_partition,
    remove_bar,
    valuation,
    weight_tower,
)

bar_partitions = st.sets(st.integers(1, 28), max_size=6).map(
    lambda s: BarPartition(tuple(sorted(s, reverse=True)))
)


def bp(*parts):
    return make_bar_partition(parts)


class TestConstruction:
    def test_basic(self):
        lam = bp(4, 1)
        assert lam.parts == (4, 1)
        assert lam.n == 5
        assert lam.m == 2

    def test_empty(self):
        assert EMPTY.n == 0
        assert EMPTY.m == 0

    def test_sorts_input(self):
        assert make_bar_partition([1, 4]).parts == (4, 1)

    def test_rejects_repeats(self):
        with pytest.raises(ValueError):
            make_bar_partition([3, 3])

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            make_bar_partition([3, 0])
        with pytest.raises(ValueError):
            make_bar_partition([-1])

    def test_text_roundtrip(self):
        assert parse_partition("8,1").parts == (8, 1)
        assert parse_partition("-") == EMPTY
        assert format_partition(bp(8, 1)) == "8,1"
        assert format_partition(EMPTY) == "-"
        with pytest.raises(ValueError):
            parse_partition("8,x")
        with pytest.raises(ValueError):
            parse_partition("3,3")


class TestEnumeration:
    def test_zero(self):
        assert enumerate_bar_partitions(0) == [EMPTY]

    def test_three(self):
        assert enumerate_bar_partitions(3) == [bp(3), bp(2, 1)]

    def test_nine(self):
        got = enumerate_bar_partitions(9)
        expected = {bp(9), bp(8, 1), bp(7, 2), bp(6, 3), bp(5, 4),
                    bp(6, 2, 1), bp(5, 3, 1), bp(4, 3, 2)}
        assert set(got) == expected
        assert len(got) == 8
        # canonical order is decreasing lexicographic on part lists
        assert got == sorted(got, key=lambda lam: lam.parts, reverse=True)

    def test_negative(self):
        with pytest.raises(ValueError):
            enumerate_bar_partitions(-1)


class TestBars:
    def test_single_part(self):
        table = bars(bp(3))
        assert table.lengths() == [1, 2, 3]
        assert all(b.kind in (TYPE1, TYPE2) for b in table.bars)
        assert table.h_total == 6
        assert table.h_mixed == 1

    def test_five_one(self):
        table = bars(bp(5, 1))
        assert table.lengths() == [1, 1, 2, 3, 5, 6]
        assert table.h_total == 180

    def test_two_one(self):
        table = bars(bp(2, 1))
        assert table.lengths() == [1, 2, 3]
        assert table.h_total == 6
        assert table.h_mixed == 3
        (mixed,) = [b for b in table.bars if b.kind == TYPE3]
        assert (mixed.i, mixed.j, mixed.length) == (1, 2, 3)

    @pytest.mark.parametrize("n", range(13))
    def test_multiset_size_is_n(self, n):
        for lam in enumerate_bar_partitions(n):
            assert len(bars(lam).bars) == lam.n

    @given(st.integers(1, 40))
    def test_single_part_factorial(self, a):
        table = bars(BarPartition((a,)))
        assert table.lengths() == list(range(1, a + 1))
        assert table.h_mixed == 1
        assert table.h_total == math.factorial(a)

    @given(bar_partitions)
    def test_products_consistent(self, lam):
        table = bars(lam)
        assert table.h_total == table.h_unmixed * table.h_mixed
        prod = 1
        for length in table.lengths():
            prod *= length
        assert prod == table.h_total


class TestRemoveBar:
    def test_whole_part(self):
        assert remove_bar(bp(3), Bar(TYPE2, 3, y=3)) == EMPTY

    def test_mixed(self):
        assert remove_bar(bp(2, 1), Bar(TYPE3, 3, i=1, j=2)) == EMPTY

    def test_rejects_part_as_x(self):
        # length 3 is not a bar of part 4 in (4,1): the shrunk value 1 is a part
        with pytest.raises(ValueError):
            remove_bar(bp(4, 1), Bar(TYPE1, 3, x=1, y=4))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            remove_bar(bp(3), Bar(TYPE2, 2, y=3))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_every_bar_removes_cleanly(self, n):
        for lam in enumerate_bar_partitions(n):
            for bar in bars(lam).bars:
                smaller = remove_bar(lam, bar)
                assert smaller.n == lam.n - bar.length


class TestCoreAndWeight:
    def test_examples(self):
        assert bar_core_and_weight(bp(3), 3) == (EMPTY, 1)
        assert bar_core_and_weight(bp(4, 1), 3) == (bp(4, 1), 0)
        assert bar_core_and_weight(bp(8, 1), 3) == (EMPTY, 3)

    def test_rejects_bad_p(self):
        for p in (2, 4, 9, 1):
            with pytest.raises(ValueError):
                bar_core_and_weight(bp(3), p)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_invariants(self, p):
        for n in range(15):
            for lam in enumerate_bar_partitions(n):
                core, w = bar_core_and_weight(lam, p)
                assert lam.n == core.n + p * w
                assert is_bar_core(core, p)
                assert bar_core_and_weight(core, p) == (core, 0)

    def test_order_independence(self):
        rng = random.Random(20240817)
        for n in range(13):
            for lam in enumerate_bar_partitions(n):
                expected = bar_core_and_weight(lam, 3)
                for _ in range(25):
                    assert bar_core_and_weight(lam, 3, rng=rng) == expected

    @given(bar_partitions, st.sampled_from([3, 5, 7]), st.integers(0, 2**32))
    @settings(max_examples=60)
    def test_order_independence_random(self, lam, p, seed):
        deterministic = bar_core_and_weight(lam, p)
        assert bar_core_and_weight(lam, p, rng=random.Random(seed)) == deterministic


class TestWeightTower:
    def test_empty(self):
        assert weight_tower(EMPTY, 3) == ((), 0)

    def test_nine(self):
        ws, v = weight_tower(bp(9), 3)
        assert ws == (3, 1)
        assert v == 4 == valuation(math.factorial(9), 3)

    def test_five_one(self):
        assert weight_tower(bp(5, 1), 3) == ((2,), 2)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_valuation_of_product(self, p):
        for n in range(13):
            for lam in enumerate_bar_partitions(n):
                ws, v = weight_tower(lam, p)
                assert v == sum(ws)
                h = bars(lam).h_total
                assert v == (valuation(h, p) if h > 1 else 0)

    def test_first_weight_matches_core_removals(self):
        for n in range(13):
            for lam in enumerate_bar_partitions(n):
                ws, _ = weight_tower(lam, 3)
                w1 = ws[0] if ws else 0
                assert bar_core_and_weight(lam, 3)[1] == w1


class TestLabelsWithCoreAndWeight:
    def test_empty_core_weight_one(self):
        assert labels_with_core_and_weight(EMPTY, 3, 1) == [bp(3), bp(2, 1)]

    def test_empty_core_weight_three(self):
        got = labels_with_core_and_weight(EMPTY, 3, 3)
        assert got == enumerate_bar_partitions(9)

    def test_weight_zero(self):
        assert labels_with_core_and_weight(bp(4, 1), 3, 0) == [bp(4, 1)]

    def test_rejects_non_core(self):
        with pytest.raises(ValueError):
            labels_with_core_and_weight(bp(3), 3, 1)


def test_valuation():
    assert valuation(240, 3) == 1
    assert valuation(16, 3) == 0
    assert valuation(1, 5) == 0
    assert valuation(250, 5) == 3
    with pytest.raises(ValueError):
        valuation(0, 3)
