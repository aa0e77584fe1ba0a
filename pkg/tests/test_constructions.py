from fractions import Fraction

import pytest

from spinblocks.barpart import (
    EMPTY,
    TYPE1,
    TYPE2,
    bar_core_and_weight,
    bars,
    enumerate_bar_partitions,
    is_bar_core,
    make_bar_partition,
)
from spinblocks.constructions import (
    TWO_CLASSES,
    UNIQUE_CLASS,
    add_part_pw,
    add_part_ratio,
    add_part_ratio_parts,
    compare_constructions,
    decompose_core,
    grow_class,
    grow_class_ratio,
    grow_class_ratio_parts,
    principal_gap_check,
    principal_pair,
    verify_ratio_identities,
)


def bp(*parts):
    return make_bar_partition(parts)


def cores_up_to(size, p):
    out = []
    for n in range(size + 1):
        out.extend(lam for lam in enumerate_bar_partitions(n) if is_bar_core(lam, p))
    return out


class TestDecompose:
    def test_single_part(self):
        dec = decompose_core(bp(1), 3)
        assert dec.classes == ((), (1,), ())
        assert dec.d == (-1, 0, -1)
        assert dec.e == (-3, 1, -1)
        assert dec.nonempty == (1,)

    def test_two_classes(self):
        dec = decompose_core(bp(3, 1), 5)
        assert dec.classes[1] == (1,)
        assert dec.classes[3] == (3,)
        assert dec.nonempty == (1, 3)
        assert dec.e[1] == 1 and dec.e[3] == 3

    def test_stacked_class(self):
        dec = decompose_core(bp(4, 1), 3)
        assert dec.classes[1] == (1, 4)
        assert dec.d[1] == 1
        assert dec.e[1] == 4

    def test_rejects_non_core(self):
        with pytest.raises(ValueError):
            decompose_core(bp(3), 3)  # part divisible by p
        with pytest.raises(ValueError):
            decompose_core(bp(2, 1), 3)  # opposite classes both occupied
        with pytest.raises(ValueError):
            decompose_core(bp(4), 3)  # class 1 has a gap (no part 1)


class TestConstructions:
    def test_add_part(self):
        assert add_part_pw(bp(1), 3, 1) == bp(3, 1)
        assert add_part_pw(bp(1), 3, 3) == bp(9, 1)
        assert add_part_pw(EMPTY, 3, 2) == bp(6)

    def test_grow_class(self):
        assert grow_class(bp(1), 3, 1, 1) == bp(4)
        assert grow_class(bp(4, 1), 3, 1, 2) == bp(10, 1)
        assert grow_class(bp(3, 1), 5, 3, 1) == bp(8, 1)

    def test_grow_class_rejects_empty_class(self):
        with pytest.raises(ValueError):
            grow_class(bp(1), 3, 2, 1)

    def test_principal_pair(self):
        assert principal_pair(3, 3) == (bp(9), bp(8, 1))
        assert principal_pair(5, 2) == (bp(10), bp(9, 1))
        with pytest.raises(ValueError):
            principal_pair(3, 1)

    @pytest.mark.parametrize("p", [3, 5])
    def test_core_weight_and_length(self, p):
        for gamma in cores_up_to(8, p):
            for w in (1, 2, 3):
                lam = add_part_pw(gamma, p, w)
                assert bar_core_and_weight(lam, p) == (gamma, w)
                assert lam.m == gamma.m + 1
                dec = decompose_core(gamma, p)
                for i in dec.nonempty:
                    mu = grow_class(gamma, p, i, w)
                    assert bar_core_and_weight(mu, p) == (gamma, w)
                    assert mu.m == gamma.m

    @pytest.mark.parametrize("p", [3, 5])
    def test_divisible_bar_types(self, p):
        # every p-divisible bar of a grown label is a part-shrinking bar;
        # the added-part label has exactly one part-deletion bar among them
        for gamma in cores_up_to(8, p):
            dec = decompose_core(gamma, p)
            for w in (1, 2, 3):
                for i in dec.nonempty:
                    mu = grow_class(gamma, p, i, w)
                    kinds = [b.kind for b in bars(mu).bars if b.length % p == 0]
                    assert kinds and set(kinds) == {TYPE1}
                lam = add_part_pw(gamma, p, w)
                kinds = [b.kind for b in bars(lam).bars if b.length % p == 0]
                assert kinds.count(TYPE2) == 1
                assert set(kinds) <= {TYPE1, TYPE2}


class TestRatioValues:
    def test_grow_class_examples(self):
        assert grow_class_ratio(bp(1), 3, 1, 1) == 24
        assert grow_class_ratio(bp(1), 3, 1, 2) == 210
        assert grow_class_ratio(bp(4, 1), 3, 1, 1) == 168

    def test_grow_class_stacked_class_direct(self):
        # H((7,1)) / H((4,1)) with p = 3, where class 1 holds both parts
        assert Fraction(bars(bp(7, 1)).h_total, bars(bp(4, 1)).h_total) == 168

    def test_add_part_examples(self):
        assert add_part_ratio_parts(bp(1), 3, 1) == (3, 4)
        assert add_part_ratio_parts(bp(1), 3, 2) == (48, Fraction(7, 4))
        assert add_part_ratio_parts(bp(4, 1), 3, 1)[1] == 28
        assert add_part_ratio(bp(1), 3, 1) == 12

    def test_parts_multiply_to_total(self):
        for gamma, p in ((bp(1), 3), (bp(4, 1), 3), (bp(3, 1), 5)):
            dec = decompose_core(gamma, p)
            for w in (1, 2, 3):
                for i in dec.nonempty:
                    u, m = grow_class_ratio_parts(gamma, p, i, w)
                    assert u * m == grow_class_ratio(gamma, p, i, w)
                u, m = add_part_ratio_parts(gamma, p, w)
                assert u * m == add_part_ratio(gamma, p, w)

    def test_rejects_empty_core_add_part(self):
        with pytest.raises(ValueError):
            add_part_ratio(EMPTY, 3, 2)


class TestRatioIdentities:
    def test_report_structure(self):
        report = verify_ratio_identities(bp(1), 3, 1)
        assert report.all_ok
        assert {c.identity for c in report.checks} == {
            "grow-class-unmixed", "grow-class-mixed", "grow-class-total",
            "add-part-unmixed", "add-part-mixed", "add-part-total",
        }

    def test_empty_core_notes(self):
        report = verify_ratio_identities(EMPTY, 3, 2)
        assert report.all_ok
        assert report.checks == ()
        assert any("empty core" in note for note in report.notes)

    @pytest.mark.parametrize("p", [3, 5])
    def test_sweep(self, p):
        for gamma in cores_up_to(9, p):
            for w in (1, 2, 3):
                assert verify_ratio_identities(gamma, p, w).all_ok

    def test_telescoping(self):
        # the product of step ratios recovers the full quotient H(lam)/H(gamma)
        for gamma, p, i in ((bp(1), 3, 1), (bp(4, 1), 3, 1), (bp(3, 1), 5, 3)):
            h_gamma = bars(gamma).h_total
            for w in (1, 2, 3, 4):
                prod = Fraction(1)
                for step in range(1, w + 1):
                    prod *= grow_class_ratio(gamma, p, i, step)
                assert prod == Fraction(bars(grow_class(gamma, p, i, w)).h_total, h_gamma)
                prod = Fraction(1)
                for step in range(1, w + 1):
                    prod *= add_part_ratio(gamma, p, step)
                assert prod == Fraction(bars(add_part_pw(gamma, p, w)).h_total, h_gamma)


class TestComparisons:
    def test_two_classes(self):
        res = compare_constructions(bp(3, 1), 5, 1)
        assert res.case == TWO_CLASSES
        assert res.larger == bp(8, 1)
        assert res.smaller == bp(6, 3)
        assert (res.h_larger, res.h_smaller) == (51840, 12960)
        assert res.verified

    def test_unique_class(self):
        res = compare_constructions(bp(1), 3, 3)
        assert res.case == UNIQUE_CLASS
        assert res.larger == bp(10)
        assert res.smaller == bp(9, 1)
        assert res.verified

    def test_rejects_empty_core(self):
        with pytest.raises(ValueError):
            compare_constructions(EMPTY, 3, 2)

    @pytest.mark.parametrize("p", [3, 5])
    def test_sweep_strict(self, p):
        for gamma in cores_up_to(9, p):
            if gamma.m == 0:
                continue
            for w in (1, 2, 3, 4):
                assert compare_constructions(gamma, p, w).verified

    def test_monotone_in_w(self):
        # each step ratio exceeds 1, so the grown label's product grows with w
        for gamma, p, i in ((bp(1), 3, 1), (bp(3, 1), 5, 1)):
            for w in (2, 3, 4):
                assert grow_class_ratio(gamma, p, i, w) > 1
                assert add_part_ratio(gamma, p, w) > 1


class TestPrincipalGap:
    def test_values(self):
        res = principal_gap_check(3, 2)
        assert (res.h_single, res.h_split) == (720, 180)
        assert res.ok
        res = principal_gap_check(3, 3)
        assert (res.h_single, res.h_split) == (362880, 51840)
        assert res.ok
        res = principal_gap_check(5, 2)
        assert (res.h_single, res.h_split) == (3628800, 453600)
        assert res.ok

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_sweep(self, p):
        for w in range(2, 11):
            assert principal_gap_check(p, w).ok
