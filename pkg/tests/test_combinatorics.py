from __future__ import annotations

import threading

import pytest
from conftest import bp, bipartitions_st, partitions_st
from hypothesis import given
from hypothesis import strategies as st

from deligne_gl.combinatorics import (
    Bipartition,
    ParseError,
    Partition,
    bipartitions,
    box_moves,
    canonical_key,
    format_bipartition,
    is_almost_cross,
    is_cross,
    is_hook,
    lr_coefficient,
    lr_product,
    multinomial_f,
    parse_bipartition,
    partitions,
    standard_tableaux_count,
    transpose,
)
from deligne_gl.oracle import lr_oracle


class TestPartitions:
    def test_transpose_examples(self):
        assert transpose((5, 2, 2, 2, 1, 1)) == (6, 4, 1, 1, 1)
        assert transpose(()) == ()
        assert transpose((3,)) == (1, 1, 1)

    @given(partitions_st(20))
    def test_transpose_involution(self, p):
        assert transpose(transpose(p)) == p
        assert sum(transpose(p)) == sum(p)

    def test_partition_validation(self):
        assert Partition((2, 1, 0, 0)) == (2, 1)
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_part_indexing_is_one_based(self):
        p = Partition((4, 2))
        assert (p.part(1), p.part(2), p.part(3)) == (4, 2, 0)

    def test_box_moves(self):
        assert box_moves(Partition((2,)), "add") == {Partition((3,)), Partition((2, 1))}
        assert box_moves(Partition(()), "remove") == set()
        assert box_moves(Partition((2, 1)), "remove") == {Partition((1, 1)), Partition((2,))}

    @given(partitions_st(10))
    def test_box_moves_change_size_by_one(self, p):
        assert all(sum(q) == sum(p) + 1 for q in box_moves(p, "add"))
        assert all(sum(q) == sum(p) - 1 for q in box_moves(p, "remove"))
        for q in box_moves(p, "add"):
            assert p in box_moves(q, "remove")

    def test_partition_counts(self):
        assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


class TestBipartitions:
    def test_dual_involution(self):
        lam = bp((3, 1), (2,))
        assert lam.dual() == bp((2,), (3, 1))
        assert lam.dual().dual() == lam

    def test_size(self):
        assert bp((3, 2), (3, 1)).size == (5, 4)
        assert bp((3, 2), (3, 1)).total == 9

    def test_canonical_order(self):
        items = sorted([bp((1,), (1,)), bp((2,)), bp(), bp((), (2,)), bp((1, 1))], key=canonical_key)
        assert items == [bp(), bp((), (2,)), bp((1,), (1,)), bp((1, 1)), bp((2,))]


class TestParsing:
    @pytest.mark.parametrize(
        "text, expected",
        [("(3,2|3,1)", bp((3, 2), (3, 1))), ("(|)", bp()), ("(2|)", bp((2,))), (" ( 1 , 1 | 2 ) ", bp((1, 1), (2,)))],
    )
    def test_parse(self, text, expected):
        assert parse_bipartition(text) == expected

    @pytest.mark.parametrize("text", ["(1,2|)", "(1|", "1|1)", "(1,a|)", "(1||2)", "(0|)", "(1)"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_bipartition(text)

    def test_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_bipartition("(1,2|)")
        assert info.value.position == 3

    @given(bipartitions_st())
    def test_round_trip(self, lam):
        assert parse_bipartition(format_bipartition(lam)) == lam


class TestLittlewoodRichardson:
    def test_examples(self):
        assert lr_coefficient((1,), (1,), ()) == 1
        assert lr_coefficient((2, 1), (2,), (1,)) == 1
        assert lr_coefficient((2, 2, 1, 1), (2, 1), (2, 1)) == 1
        assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2

    def test_vanishing_outside_support(self):
        assert lr_coefficient((3,), (1, 1), (1,)) == 0
        assert lr_coefficient((2, 1), (2,), (2,)) == 0

    def test_against_monomial_oracle(self):
        for n in range(7):
            for nu in partitions(n):
                for a in range(n + 1):
                    for lam in partitions(a):
                        for mu in partitions(n - a):
                            c = lr_coefficient(nu, lam, mu)
                            assert c == lr_oracle(nu, lam, mu)
                            assert c == lr_coefficient(nu, mu, lam)
                            assert c == lr_coefficient(transpose(nu), transpose(lam), transpose(mu))

    def test_standard_tableaux_identity(self):
        # f(lam) f(mu) C(|lam|+|mu|, |lam|) = sum_nu LR f(nu)
        for n in range(9):
            for a in range(n + 1):
                for lam in partitions(a):
                    for mu in partitions(n - a):
                        rhs = sum(c * standard_tableaux_count(nu) for nu, c in lr_product(lam, mu).items())
                        assert multinomial_f(lam, mu) == rhs

    def test_hook_length(self):
        assert [standard_tableaux_count(p) for p in [(), (1,), (2, 1), (3, 2), (2, 2, 1, 1)]] == [1, 1, 2, 5, 9]

    def test_concurrent_cache_use(self):
        triples = [(nu, lam, mu) for nu in partitions(6) for lam in partitions(3) for mu in partitions(3)]
        expected = {t: lr_oracle(*t) for t in triples}
        errors = []

        def worker():
            for t in triples:
                if lr_coefficient(*t) != expected[t]:
                    errors.append(t)

        threads = [threading.Thread(target=worker) for _ in range(4)]
        for th in threads:
            th.start()
        for th in threads:
            th.join()
        assert not errors


class TestHooksAndCrosses:
    def test_hook(self):
        assert is_hook(Partition((3, 1)), 1, 1)
        assert not is_hook(Partition((2, 2)), 1, 1)
        assert is_hook(Partition(()), 0, 0)

    def test_cross_examples(self):
        lam = bp((3, 1), (2,))
        assert is_cross(lam, 2, 1)
        assert is_cross(lam, 1, 3)
        assert not is_cross(lam, 1, 2)
        assert is_cross(bp(), 0, 0)

    def test_almost_cross_examples(self):
        for n in range(4):
            for l in range(n + 2):
                assert is_almost_cross(bp((l,), (n + 1 - l,)), 0, n)
        assert not is_almost_cross(bp(), 0, 0)
        assert is_almost_cross(bp((2, 1), (2, 1)), 1, 2)

    @pytest.mark.parametrize("m,n", [(0, 1), (1, 1), (1, 2), (2, 1), (2, 0), (0, 2)])
    def test_almost_cross_is_minimal_non_cross(self, m, n):
        found = 0
        for r in range(7):
            for s in range(7):
                for lam in bipartitions(r, s):
                    if not is_almost_cross(lam, m, n):
                        continue
                    found += 1
                    assert not is_cross(lam, m, n)
                    for b in box_moves(lam.black, "remove"):
                        assert is_cross(Bipartition(b, lam.white), m, n)
                    for w in box_moves(lam.white, "remove"):
                        assert is_cross(Bipartition(lam.black, w), m, n)
        assert found > 0

    @given(bipartitions_st(), st.integers(0, 3), st.integers(0, 3))
    def test_cross_is_monotone_in_n(self, lam, m, n):
        if is_cross(lam, m, n):
            assert is_cross(lam, m, n + 1)
