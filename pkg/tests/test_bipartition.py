from itertools import product

import pytest
from hypothesis import given

from repgl import Bipartition, BoundExceeded, Partition, box_moves, contains, enumerate_bipartitions
from repgl.bipartition import BipartitionMultiset, partitions, partitions_in_box
from repgl.oracle import box_moves_brute

from conftest import bipartition_strategy


def P(*parts):
    return Partition(parts)


def BP(black=(), white=()):
    return Bipartition(tuple(black), tuple(white))


def all_partitions_brute(n):
    # compositions filtered to weakly decreasing tuples
    out = set()
    for k in range(n + 1):
        for parts in product(range(1, n + 1), repeat=k):
            if sum(parts) == n and list(parts) == sorted(parts, reverse=True):
                out.add(parts)
    return out


class TestPartition:
    def test_trailing_zeros_dropped(self):
        assert P(3, 1, 0, 0).parts == (3, 1)

    @pytest.mark.parametrize("parts", [(1, 2), (2, -1), (0, 1)])
    def test_rejects_bad_parts(self, parts):
        with pytest.raises(ValueError):
            Partition(parts)

    def test_rows_past_end_read_zero(self):
        p = P(2, 1)
        assert (p[1], p[2], p[3], p[10]) == (2, 1, 0, 0)

    @pytest.mark.parametrize("n", range(7))
    def test_partitions_match_brute(self, n):
        got = [p.parts for p in partitions(n)]
        assert len(got) == len(set(got))
        assert set(got) == all_partitions_brute(n)
        assert got == sorted(got, reverse=True)

    def test_partitions_in_box(self):
        boxed = list(partitions_in_box(2, 3))
        assert len(boxed) == 10  # C(5, 2)
        assert all(len(p) <= 2 and p[1] <= 3 for p in boxed)


class TestContains:
    @pytest.mark.parametrize(
        "mu, lam, expected",
        [
            (BP([2, 1]), BP([3, 1], [1]), True),
            (BP(), BP([4, 2], [3, 3]), True),
            (BP([1, 1]), BP([2], [3]), False),
        ],
    )
    def test_examples(self, mu, lam, expected):
        assert contains(mu, lam) is expected

    def test_partial_order_on_universe(self):
        universe = list(enumerate_bipartitions(4))
        for a in universe:
            assert contains(a, a)
            for b in universe:
                if contains(a, b) and contains(b, a):
                    assert a == b
                if contains(a, b):
                    for c in universe:
                        if contains(b, c):
                            assert contains(a, c)


class TestBoxMoves:
    def test_two_one(self):
        moves = box_moves(BP([2], [1]))
        assert moves.add_black == (BP([3], [1]), BP([2, 1], [1]))
        assert moves.add_white == (BP([2], [2]), BP([2], [1, 1]))
        assert moves.rem_black == (BP([1], [1]),)
        assert moves.rem_white == (BP([2]),)

    def test_empty(self):
        moves = box_moves(BP())
        assert moves.add_black == (BP([1]),)
        assert moves.add_white == (BP([], [1]),)
        assert moves.rem_black == moves.rem_white == ()

    def test_equal_rows(self):
        assert box_moves(BP([1, 1])).rem_black == (BP([1]),)

    @pytest.mark.parametrize("lam", list(enumerate_bipartitions(6)), ids=str)
    def test_against_cell_oracle(self, lam):
        moves = box_moves(lam)
        brute = box_moves_brute(lam)
        for name in ("add_black", "add_white", "rem_black", "rem_white"):
            assert set(getattr(moves, name)) == brute[name]
        distinct = len(set(lam.black.parts))
        assert len(moves.add_black) == distinct + 1
        assert len(moves.rem_black) == distinct

    @given(bipartition_strategy())
    def test_add_remove_inverse(self, lam):
        moves = box_moves(lam)
        for mu in moves.rem_black:
            assert lam in box_moves(mu).add_black
        for mu in moves.rem_white:
            assert lam in box_moves(mu).add_white
        for mu in moves.add_black + moves.add_white:
            assert mu.size == lam.size + 1


class TestEnumeration:
    def test_size_zero(self):
        assert list(enumerate_bipartitions(0)) == [BP()]

    def test_size_one(self):
        assert list(enumerate_bipartitions(1)) == [BP(), BP([1]), BP([], [1])]

    def test_size_two_layer(self):
        layer = [lam for lam in enumerate_bipartitions(2) if lam.size == 2]
        assert layer == [BP([2]), BP([1, 1]), BP([1], [1]), BP([], [2]), BP([], [1, 1])]

    @pytest.mark.parametrize("n", range(8))
    def test_counts_by_double_counting(self, n):
        brute = sum(len(all_partitions_brute(a)) * len(all_partitions_brute(n - a)) for a in range(n + 1))
        got = [lam for lam in enumerate_bipartitions(n) if lam.size == n]
        assert len(got) == len(set(got)) == brute

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            next(enumerate_bipartitions(13))
        assert sum(1 for _ in enumerate_bipartitions(3, bound=3)) == 1 + 2 + 5 + 10


class TestMultiset:
    def test_zero_entries_dropped(self):
        ms = BipartitionMultiset({BP([1]): 0, BP(): 2})
        assert dict(ms) == {BP(): 2}
        assert ms == BipartitionMultiset([BP(), BP()])

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            BipartitionMultiset({BP(): -1})

    def test_sum_and_order(self):
        a = BipartitionMultiset([BP([1]), BP([2, 1])])
        total = a + a
        assert total.total() == 4
        assert [lam for lam, _ in total.sorted_items()] == [BP([2, 1]), BP([1])]
        assert hash(total) == hash(BipartitionMultiset({BP([1]): 2, BP([2, 1]): 2}))
