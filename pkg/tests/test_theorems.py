import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wronskian_zeros.errors import DuplicateIndex
from wronskian_zeros.families import FamilySpec
from wronskian_zeros.polyalg import Interval, RatPoly
from wronskian_zeros.theorems import (
    adler_admissible,
    alternating_sum,
    common_roots,
    default_probes,
    degeneracy_scan,
    duality_check,
    felder_counts,
    karlin_szego_check,
    krein_nonnegative,
    predicted_count_generic,
    predicted_symmetric,
    simplicity_check,
    strictly_interlace,
    verify_partition,
)
from wronskian_zeros.wronskian import MultiIndex, Partition

HERMITE = FamilySpec.hermite()
LAG_HALF = FamilySpec.laguerre(Fraction(1, 2))
LEGENDRE01 = FamilySpec.from_moments([Fraction(1, k + 1) for k in range(30)], Interval(0, 1))


def brute_adler(ks):
    """Split into maximal runs directly from the definition."""
    runs = []
    for k in ks:
        if runs and runs[-1][-1] == k - 1:
            runs[-1].append(k)
        else:
            runs.append([k])
    if runs[0][0] == 0:
        runs = runs[1:]
    return all(len(r) % 2 == 0 for r in runs)


class TestPredictors:
    @pytest.mark.parametrize("parts,expected", [((2, 2), 0), ((1, 3), 2), ((3,), 3), ((1, 2, 4), 3)])
    def test_generic(self, parts, expected):
        assert predicted_count_generic(Partition(parts)) == expected

    def test_symmetric_examples(self):
        p = predicted_symmetric(Partition.of(1, 2))
        assert (p.origin_multiplicity, p.positive_count, p.total_distinct) == (3, 0, 1)
        p = predicted_symmetric(Partition.of(1, 3))
        assert (p.origin_multiplicity, p.positive_count, p.total_distinct) == (0, 1, 2)
        p = predicted_symmetric(Partition.of(3, 3))
        assert (p.origin_multiplicity, p.positive_count, p.total_distinct) == (0, 0, 0)
        assert p.negative_count == p.positive_count

    @given(st.lists(st.integers(0, 6), min_size=1, max_size=5))
    def test_symmetric_total_invariant(self, parts):
        p = predicted_symmetric(Partition(tuple(sorted(parts))))
        assert p.negative_count == p.positive_count
        assert p.total_distinct == 2 * p.positive_count + (1 if p.origin_multiplicity else 0)

    @given(st.lists(st.integers(0, 6), min_size=1, max_size=4), st.integers(0, 6))
    def test_doubled_block_keeps_alternating_sum(self, parts, nu):
        base = sorted(parts)
        with_block = sorted(base + [nu, nu])
        assert alternating_sum(base) == alternating_sum(with_block)

    @pytest.mark.parametrize("ks,expected", [((0, 1, 2, 5, 6), True), ((1,), False), ((2, 3), True), ((0, 2, 3), True), ((0, 2), False)])
    def test_adler_examples(self, ks, expected):
        assert adler_admissible(MultiIndex(ks)) is expected

    @given(st.sets(st.integers(0, 10), min_size=1, max_size=5))
    def test_adler_matches_brute_force(self, ks):
        ks = tuple(sorted(ks))
        assert adler_admissible(MultiIndex(ks)) == brute_adler(ks)

    @pytest.mark.parametrize("ks,expected", [((2, 3), True), ((1, 4), False), ((0, 1, 2), True), ((1,), False)])
    def test_krein_examples(self, ks, expected):
        assert krein_nonnegative(MultiIndex(ks)) is expected

    @given(st.sets(st.integers(0, 10), min_size=1, max_size=5))
    def test_krein_implies_adler(self, ks):
        k = MultiIndex(tuple(sorted(ks)))
        if krein_nonnegative(k):
            assert adler_admissible(k)

    def test_default_probes(self):
        assert default_probes(MultiIndex((1, 4))) == [0, 2]
        assert default_probes(MultiIndex((0, 1, 2)), 3) == [3, 4, 5]


class TestDegeneracy:
    def test_hermite_clean(self):
        assert degeneracy_scan(HERMITE, Partition.of(1, 1), [3, 4]) == []

    def test_laguerre_clean(self):
        assert degeneracy_scan(LAG_HALF, Partition.of(1, 2), [4, 5]) == []

    def test_odd_hermite_pair_share_only_origin(self):
        h3, h5 = HERMITE.poly(3), HERMITE.poly(5)
        g, n = common_roots(h3, h5, Interval())
        assert g == RatPoly([0, 1]) and n == 1
        g, n = common_roots(h3, h5, Interval(), ignore_origin=True)
        assert n == 0

    def test_gegenbauer_half_is_degenerate(self):
        fam = FamilySpec.jacobi(Fraction(1, 2), Fraction(1, 2))
        report = verify_partition(fam, Partition.of(2, 4))
        assert report.degenerate
        assert report.status == "degenerate"
        assert report.witnesses

    def test_duplicate_probe(self):
        with pytest.raises(DuplicateIndex):
            degeneracy_scan(HERMITE, Partition.of(1, 3), [4])


class TestVerify:
    def test_hermite_1_3(self):
        r = verify_partition(HERMITE, Partition.of(1, 3))
        assert r.passed and r.exact_count == 2 and r.exact_origin_mult == 0
        assert r.predicted.total_distinct == 2

    def test_laguerre_1_1(self):
        r = verify_partition(LAG_HALF, Partition.of(1, 1))
        assert r.passed and r.predicted == 0 and r.exact_count == 0

    def test_hermite_2_2(self):
        r = verify_partition(HERMITE, Partition.of(2, 2))
        assert r.passed and r.exact_count == 0

    def test_origin_case(self):
        r = verify_partition(HERMITE, Partition.of(1, 2))
        assert r.passed and r.exact_origin_mult == 3 and r.exact_count == 1

    def test_report_serializes(self):
        r = verify_partition(LEGENDRE01, Partition.of(1, 2), keep_polynomial=True)
        doc = json.loads(json.dumps(r.to_dict()))
        assert doc["label"] == "conjecture probe"
        assert all(isinstance(c, str) for c in doc["wronskian"])
        assert doc["k"] == [1, 3]
        assert set(r.csv_row()) == {"family", "partition", "k", "d_lambda", "predicted", "exact", "origin_mult", "degenerate", "pass"}

    @pytest.mark.parametrize("parts,mult", [((1, 2), 3), ((1, 1), 0), ((1, 3), 0)])
    def test_simplicity(self, parts, mult):
        assert simplicity_check(HERMITE, Partition(parts)) == (True, mult)


class TestDualityAndFelder:
    @pytest.mark.parametrize("parts,c", [((1,), Fraction(1)), ((1, 1), Fraction(1, 2)), ((1, 3), Fraction(8))])
    def test_duality(self, parts, c):
        assert duality_check(Partition(parts)) == (True, c)

    @pytest.mark.parametrize("mu,expected", [((1,), (0, 2)), ((3,), (0, 2)), ((2,), (0, 0)), ((1, 3), (0, 4))])
    def test_felder(self, mu, expected):
        assert felder_counts(mu) == expected


class TestInterlacing:
    def test_hermite_neighbours_interlace(self):
        assert strictly_interlace(HERMITE.poly(4), HERMITE.poly(5), Interval())

    def test_shared_root_is_not_strict(self):
        assert not strictly_interlace(HERMITE.poly(3), HERMITE.poly(5), Interval())

    def test_non_alternating(self):
        a = RatPoly([-1, 0, 1])  # roots ±1
        b = RatPoly([-4, 0, 1])  # roots ±2
        assert not strictly_interlace(a, b, Interval())

    def test_karlin_even_length_is_sign_definite(self):
        res = karlin_szego_check(HERMITE, 2, 2)
        assert res.count == 0 and res.interlaces_with_next is None

    def test_karlin_constant(self):
        assert karlin_szego_check(HERMITE, 0, 3).count == 0

    @pytest.mark.parametrize("fam", [HERMITE, LEGENDRE01], ids=["hermite", "legendre01"])
    @pytest.mark.parametrize("ell", [1, 3])
    def test_karlin_odd_length(self, fam, ell):
        for n in range(1, 5):
            res = karlin_szego_check(fam, n, ell)
            assert res.count == n
            assert res.interlaces_with_next is True

    def test_karlin_moments_even(self):
        assert karlin_szego_check(LEGENDRE01, 1, 2).count == 0
