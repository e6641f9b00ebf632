import itertools

import pytest

from lrpos import (
    HeightExceedsRank,
    MalformedInput,
    NegativePart,
    NonpositiveScale,
    NotWeaklyDecreasing,
    Partition,
    parse_partition,
    partitions_of,
    render_partition,
    weyl_dimension,
)

from conftest import P


class TestParse:
    def test_basic(self):
        assert parse_partition("2,1") == Partition([2, 1])

    def test_empty_forms(self):
        assert parse_partition("") == Partition()
        assert parse_partition("0") == Partition()
        assert parse_partition("   ") == Partition()

    def test_whitespace_tolerated(self):
        assert parse_partition(" 4 , 2 ,2, 1 ") == Partition([4, 2, 2, 1])

    def test_trailing_zeros_stripped(self):
        assert parse_partition("3,1,0,0") == Partition([3, 1])
        assert parse_partition("3,1,0,0").height == 2

    def test_not_weakly_decreasing(self):
        with pytest.raises(NotWeaklyDecreasing):
            parse_partition("1,2")

    def test_negative(self):
        with pytest.raises(NegativePart):
            parse_partition("2,-1")

    def test_malformed(self):
        with pytest.raises(MalformedInput):
            parse_partition("2,x")
        with pytest.raises(MalformedInput):
            parse_partition("2,,1")
        with pytest.raises(MalformedInput):
            parse_partition("1_0")

    def test_constructor_rejects_non_integers(self):
        with pytest.raises(MalformedInput):
            Partition([1.5])

    def test_big_parts(self):
        p = parse_partition(str(10**40) + "," + str(10**39))
        assert p.parts == (10**40, 10**39)


class TestRoundTrip:
    @pytest.mark.parametrize("text", ["0", "1", "2,1", "4,2,2,1", "10,10,3"])
    def test_parse_render_identity(self, text):
        assert render_partition(parse_partition(text)) == text

    def test_render_canonicalizes(self):
        assert render_partition(parse_partition(" 2 , 1 , 0 ")) == "2,1"
        assert str(Partition()) == "0"

    def test_json_round_trip(self):
        p = Partition([10**20, 3, 3])
        assert Partition.from_json(p.to_json()) == p
        assert p.to_json() == [str(10**20), "3", "3"]


class TestSizeAndScale:
    def test_size_examples(self):
        assert P("2,1").size == 3
        assert Partition().size == 0
        assert Partition([10**6, 10**6]).size == 2 * 10**6

    def test_scale_examples(self):
        assert P("2,1").scale(3) == P("6,3")
        assert Partition().scale(5) == Partition()
        assert P("1").scale(2) == P("2")

    def test_scale_preserves_height(self):
        assert P("4,2,1").scale(7).height == 3

    @pytest.mark.parametrize("q", [0, -1])
    def test_scale_rejects_nonpositive(self, q):
        with pytest.raises(NonpositiveScale):
            P("2,1").scale(q)

    def test_size_of_scale(self):
        shapes = [p for s in range(6) for p in partitions_of(s, 4)]
        for p in shapes:
            for q in (1, 2, 3, 5):
                assert p.scale(q).size == q * p.size


class TestIndexing:
    def test_zero_padding(self):
        p = P("3,1")
        assert (p[0], p[1], p[2], p[99]) == (3, 1, 0, 0)

    def test_padded(self):
        assert P("3,1").padded(4) == (3, 1, 0, 0)
        with pytest.raises(HeightExceedsRank):
            P("3,1").padded(1)

    def test_contains(self):
        assert P("3,2").contains(P("2,1"))
        assert P("3,2").contains(Partition())
        assert not P("3,2").contains(P("1,1,1"))
        assert not P("3,2").contains(P("4"))


class TestWeylDimension:
    def test_trivial_representation(self):
        assert weyl_dimension(Partition(), 3) == 1

    def test_defining_representation(self):
        assert weyl_dimension(P("1"), 3) == 3

    def test_adjoint_like_shape(self):
        # Independent count: every filling of (2,1) by entries in [1,3]
        # with the top row weakly increasing and the column strict.
        count = 0
        for x, y, z in itertools.product(range(1, 4), repeat=3):
            if x <= y and z > x:
                count += 1
        assert count == 8
        assert weyl_dimension(P("2,1"), 3) == 8

    def test_height_exceeds_rank(self):
        with pytest.raises(HeightExceedsRank):
            weyl_dimension(P("1,1,1"), 2)

    def test_dimension_at_least_one(self):
        for n in range(5):
            for size in range(6):
                for lam in partitions_of(size, n):
                    assert weyl_dimension(lam, n) >= 1

    def test_big_parts_exact(self):
        # GL_2: dim V_(a,b) = a - b + 1
        a, b = 10**18 + 5, 10**18
        assert weyl_dimension(Partition([a, b]), 2) == 6


class TestPartitionsOf:
    def test_descending_lex(self):
        got = [p.parts for p in partitions_of(5, 5)]
        assert got == [
            (5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1),
            (1, 1, 1, 1, 1),
        ]

    def test_height_cap(self):
        got = [p.parts for p in partitions_of(5, 2)]
        assert got == [(5,), (4, 1), (3, 2)]

    def test_zero(self):
        assert [p.parts for p in partitions_of(0, 3)] == [()]

    def test_matches_brute_force(self):
        for total in range(8):
            for cap in range(5):
                slow = set()
                # all weakly decreasing positive tuples summing to total
                def rec(rem, maxpart, acc):
                    if rem == 0:
                        if len(acc) <= cap:
                            slow.add(tuple(acc))
                        return
                    for part in range(min(rem, maxpart), 0, -1):
                        rec(rem - part, part, acc + [part])

                rec(total, total, [])
                if total == 0:
                    slow = {()}
                fast = {p.parts for p in partitions_of(total, cap)}
                assert fast == slow
