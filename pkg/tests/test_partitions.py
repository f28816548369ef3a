"""Partition combinatorics against brute-force oracles."""

import pytest

from fockbridge.partitions import (
    EMPTY,
    Cell,
    Partition,
    SkewShape,
    arm_leg,
    core_quotient,
    dominates,
    from_core_quotient,
    horizontal_strips,
    horizontal_strips_below,
    is_horizontal_strip,
    parse_partition,
    partitions_of,
    z_of,
)


def brute_strips(lam, k):
    # oracle: filter all partitions of |lam|+k by containment and the
    # one-cell-per-column condition, computed cellwise
    lam = Partition(lam)
    out = []
    for mu in partitions_of(lam.size + k):
        if not mu.contains(lam):
            continue
        cols = [c.col for c in SkewShape(mu, lam).cells()]
        if len(cols) == len(set(cols)):
            out.append(mu)
    return tuple(sorted(out, reverse=True))


class TestBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))
        assert Partition([3, 1, 1]).size == 5

    def test_parse_and_str(self):
        assert parse_partition("[3,1,1]") == Partition([3, 1, 1])
        assert parse_partition("[]") == EMPTY
        assert str(Partition([2, 1])) == "[2,1]"
        with pytest.raises(ValueError):
            parse_partition("3,1")

    def test_conjugate_involution(self):
        for d in range(8):
            for lam in partitions_of(d):
                assert lam.conjugate().conjugate() == lam
        assert Partition([3, 2]).conjugate() == Partition([2, 2, 1])

    def test_contains(self):
        assert Partition([3, 2]).contains(Partition([2, 2]))
        assert not Partition([3, 2]).contains(Partition([1, 1, 1]))

    def test_skew_validation(self):
        with pytest.raises(ValueError):
            SkewShape([2], [1, 1])
        shape = SkewShape([2, 1], [1])
        assert shape.size == 2
        assert shape.cells() == [Cell(1, 2), Cell(2, 1)]


class TestEnumeration:
    def test_reverse_lex_order(self):
        assert partitions_of(3) == (
            Partition([3]), Partition([2, 1]), Partition([1, 1, 1]))

    def test_counts(self):
        # p(0)..p(10)
        expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        for d, e in enumerate(expected):
            assert len(partitions_of(d)) == e

    def test_z_values(self):
        assert z_of(EMPTY) == 1
        assert z_of([2, 1]) == 2
        assert z_of([1, 1, 1]) == 6
        assert z_of([3, 3, 1]) == 18
        # sum over a degree of 1/z equals 1 (coefficientwise identity for h_n)
        from fockbridge.scalars import ONE, ZERO
        for d in range(1, 7):
            total = ZERO
            for lam in partitions_of(d):
                total = total + ONE / z_of(lam)
            # sum of 1/z_lam over partitions of d is h_d evaluated at x=(1):
            # equals 1 for every d
            assert total == ONE


class TestStrips:
    def test_examples(self):
        assert horizontal_strips(Partition([1]), 2) == (
            Partition([3]), Partition([2, 1]))
        assert horizontal_strips(Partition([2, 2]), 1) == (
            Partition([3, 2]), Partition([2, 2, 1]))
        assert horizontal_strips(EMPTY, 3) == (Partition([3]),)

    def test_against_brute_force(self):
        for d in range(5):
            for lam in partitions_of(d):
                for k in range(5):
                    assert horizontal_strips(lam, k) == brute_strips(lam, k)

    def test_below_matches_up(self):
        # mu in strips_below(lam, k) iff lam in strips(mu, k)
        for d in range(6):
            for lam in partitions_of(d):
                for k in range(4):
                    below = horizontal_strips_below(lam, k)
                    for mu in below:
                        assert lam in horizontal_strips(mu, k)
                    for mu in partitions_of(d - k):
                        if lam in horizontal_strips(mu, k):
                            assert mu in below

    def test_is_horizontal_strip(self):
        assert is_horizontal_strip(SkewShape([3, 1], [1]))
        assert not is_horizontal_strip(SkewShape([2, 2], [1]))
        assert is_horizontal_strip(SkewShape([2, 2], [2, 1]))


class TestArmLeg:
    def test_values(self):
        lam = Partition([3, 2])
        assert arm_leg(lam, Cell(1, 1)) == (2, 1)
        assert arm_leg(lam, Cell(1, 2)) == (1, 1)
        assert arm_leg(lam, Cell(1, 3)) == (0, 0)
        assert arm_leg(lam, Cell(2, 1)) == (1, 0)

    def test_conjugate_symmetry(self):
        for lam in partitions_of(6):
            conj = lam.conjugate()
            for cell in lam.cells():
                a, l = arm_leg(lam, cell)
                a2, l2 = arm_leg(conj, Cell(cell.col, cell.row))
                assert (a, l) == (l2, a2)

    def test_outside_cell_rejected(self):
        with pytest.raises(ValueError):
            arm_leg(Partition([2]), Cell(2, 1))


class TestCoreQuotient:
    def test_examples(self):
        core, quot = core_quotient(Partition([2]), 2)
        assert core == EMPTY
        assert sorted(map(tuple, quot)) == [(), (1,)]
        core, quot = core_quotient(Partition([2, 1]), 2)
        assert core == Partition([2, 1])
        assert quot == (EMPTY, EMPTY)

    def test_size_identity(self):
        for n in (2, 3):
            for d in range(9):
                for lam in partitions_of(d):
                    core, quot = core_quotient(lam, n)
                    assert lam.size == core.size + n * sum(q.size for q in quot)

    def test_round_trip(self):
        for n in (2, 3):
            for d in range(9):
                for lam in partitions_of(d):
                    core, quot = core_quotient(lam, n)
                    assert from_core_quotient(core, quot) == lam

    def test_bijection_is_injective(self):
        seen = {}
        for d in range(8):
            for lam in partitions_of(d):
                key = core_quotient(lam, 2)
                assert key not in seen
                seen[key] = lam

    def test_core_has_empty_quotient(self):
        for d in range(9):
            for lam in partitions_of(d):
                core, _ = core_quotient(lam, 3)
                core2, quot2 = core_quotient(core, 3)
                assert core2 == core
                assert all(q == EMPTY for q in quot2)

    def test_non_core_rejected(self):
        with pytest.raises(ValueError):
            from_core_quotient(Partition([2]), (EMPTY, EMPTY))


class TestDominance:
    def test_chain(self):
        assert dominates([3], [2, 1])
        assert dominates([2, 1], [1, 1, 1])
        assert not dominates([1, 1, 1], [2, 1])

    def test_incomparable(self):
        assert not dominates([3, 1, 1, 1], [2, 2, 2])
        assert not dominates([2, 2, 2], [3, 1, 1, 1])

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            dominates([2], [1])
