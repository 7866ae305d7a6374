from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import unit_sequences
from pdens import (
    KOutOfRangeError,
    NegativeKError,
    TrapezoidTriple,
    density_area,
    density_function,
    density_report,
    fingerprint,
    sum_functions,
    trapezoid,
    fingerprint_diff,
    fingerprints_equal,
    new_sequence,
    symmetry_report,
    trapezoid_triples,
)
from pdens.density import HALF


class TestZeroFold:
    def test_three_point_corners(self, tri):
        assert density_function(tri, 0).corners == (
            (0, 1),
            (F(1, 12), F(1, 2)),
            (F(1, 6), F(1, 6)),
            (F(1, 4), 0),
        )

    def test_single_point(self):
        assert density_function(new_sequence(1, [0]), 0).corners == ((0, 1), (F(1, 2), 0))

    def test_two_points(self):
        seq = new_sequence(1, [0, F(1, 4)])
        assert density_function(seq, 0).corners == ((0, 1), (F(1, 8), F(1, 2)), (F(3, 8), 0))

    def test_tied_gaps_collapse_corners(self):
        seq = new_sequence(1, [0, F(1, 4), F(1, 2)])
        assert density_function(seq, 0).corners == ((0, 1), (F(1, 8), F(1, 4)), (F(1, 4), 0))

    @given(unit_sequences())
    def test_non_increasing_and_vanishes_at_half_max_gap(self, seq):
        f = density_function(seq, 0)
        ys = [y for _, y in f.corners]
        assert all(a >= b for a, b in zip(ys, ys[1:]))
        assert f.corners[0] == (0, 1)
        assert f.corners[-1] == (max(seq.gaps()) / 2, 0)


class TestTriples:
    def test_three_point_middle_triple(self, tri):
        assert trapezoid_triples(tri, 2)[1] == TrapezoidTriple(F(1, 3), F(1, 6), F(1, 2))

    def test_single_point(self):
        assert trapezoid_triples(new_sequence(1, [0]), 1) == (TrapezoidTriple(1, 0, 1),)

    def test_s15_k2_row_in_cell_units(self, s15):
        # windows (previous gap, middle gap, next gap)
        assert trapezoid_triples(s15, 2) == tuple(
            TrapezoidTriple(*t)
            for t in [
                (3, 1, 2), (1, 2, 1), (2, 1, 1), (1, 1, 2), (1, 2, 2),
                (2, 2, 1), (2, 1, 2), (1, 2, 3), (2, 3, 1),
            ]
        )

    def test_s15_k3_row_in_cell_units(self, s15):
        assert trapezoid_triples(s15, 3) == tuple(
            TrapezoidTriple(*t)
            for t in [
                (3, 3, 1), (1, 3, 1), (2, 2, 2), (1, 3, 2), (1, 4, 1),
                (2, 3, 2), (2, 3, 3), (1, 5, 1), (2, 4, 2),
            ]
        )

    def test_k_out_of_range(self, tri):
        with pytest.raises(KOutOfRangeError):
            trapezoid_triples(tri, 0)
        with pytest.raises(KOutOfRangeError):
            trapezoid_triples(tri, 4)

    @given(unit_sequences(), st.integers(1, 6))
    def test_spans_sum_of_k_minus_1_gaps(self, seq, k):
        m = seq.motif_size
        if k > m:
            k = m
        g = seq.gaps()
        for i, t in enumerate(trapezoid_triples(seq, k)):
            assert t.left == g[(i - 1) % m]
            assert t.right == g[(i + k - 1) % m]
            assert t.span == sum(g[(i + j) % m] for j in range(k - 1))


class TestDensityFunction:
    def test_first_density_at_sixth(self, tri):
        assert density_function(tri, 1).value_at(F(1, 6)) == F(2, 3)

    def test_second_density_at_quarter(self, tri):
        # GB overlap (1/3) plus RG overlap (1/6)
        assert density_function(tri, 2).value_at(F(1, 4)) == F(1, 2)

    def test_zero_radius(self, tri):
        assert all(density_function(tri, k).value_at(0) == 0 for k in range(1, 5))

    def test_negative_k_rejected(self, tri):
        with pytest.raises(NegativeKError):
            density_function(tri, -1)

    def test_homometric_pair_k4_value(self, s15, q15):
        fs = density_function(s15, 4)
        assert fs.value_at(F(7, 30)) == F(8, 15)
        assert fs == density_function(q15, 4)

    def test_beyond_m_shifts_by_half_per_wrap(self, tri):
        f1 = density_function(tri, 1)
        assert density_function(tri, 4) == f1.shift_right(HALF)
        assert density_function(tri, 7) == f1.shift_right(F(1))
        f3 = density_function(tri, 3)
        assert density_function(tri, 6) == f3.shift_right(HALF)

    def test_m_fold_matches_shifted_zero_fold_beyond_half(self, s15):
        # half-period periodicity pins the m-fold function on t >= 1/2
        unit = s15.scale_to_unit()
        f9 = density_function(unit, 9)
        assert f9.shift_left(HALF) == density_function(unit, 0)

    def test_support_of_stored_head_within_unit(self, s15):
        for k in range(5):
            f = density_function(s15, k)
            assert f.corners[-1][0] <= 1

    @given(unit_sequences())
    @settings(deadline=None)
    def test_equals_pairwise_trapezoid_sum(self, seq):
        # the event sweep must agree with the naive add route
        m = seq.motif_size
        for k in (1, m):
            direct = sum_functions(trapezoid(t) for t in trapezoid_triples(seq, k))
            assert density_function(seq, k) == direct

    @given(unit_sequences())
    @settings(deadline=None)
    def test_first_density_initial_gradient_is_2m(self, seq):
        f = density_function(seq, 1)
        (x0, y0), (x1, y1) = f.corners[0], f.corners[1]
        assert (x0, y0) == (0, 0)
        assert (y1 - y0) / (x1 - x0) == 2 * seq.motif_size


class TestArea:
    def test_closed_forms_three_points(self, tri):
        assert density_area(tri, 0) == F(7, 72)
        assert density_area(tri, 1) == F(11, 72)
        assert density_area(tri, 2) == F(11, 72)

    def test_m_fold_is_twice_zero_fold(self, tri, s15):
        for seq in (tri, s15):
            m = seq.motif_size
            assert density_area(seq, m) == 2 * density_area(seq, 0)

    @given(unit_sequences(), st.integers(0, 8))
    @settings(deadline=None)
    def test_closed_form_equals_integral(self, seq, k):
        if k > seq.motif_size:
            k = seq.motif_size
        assert density_area(seq, k) == density_function(seq, k).integral()


class TestFingerprint:
    def test_stored_head_size(self, s15, tri):
        assert len(fingerprint(s15).functions) == 5
        assert len(fingerprint(tri).functions) == 2
        single = fingerprint(new_sequence(1, [0]))
        assert len(single.functions) == 1
        assert single.functions[0].corners == ((0, 1), (F(1, 2), 0))

    def test_zero_fold_starts_at_one(self, q15):
        fp = fingerprint(q15)
        assert fp.functions[0].corners[0] == (0, 1)

    def test_homometric_pair_equal(self, s15, q15):
        assert fingerprints_equal(s15, q15)

    def test_different_sequences_differ(self, tri):
        other = new_sequence(1, [0, F(1, 4), F(1, 2)])
        assert not fingerprints_equal(tri, other)
        diff = fingerprint_diff(fingerprint(tri), fingerprint(other))
        assert diff is not None and diff.startswith("k=0")

    def test_motif_size_mismatch_reported(self, tri, s15):
        diff = fingerprint_diff(fingerprint(tri), fingerprint(s15))
        assert diff == "motif sizes differ: 3 vs 9"

    def test_perturbed_point_detected(self, s15):
        moved = new_sequence(15, [0, 1, 3, 4, 5, 7, 9, 10, F(25, 2)])
        assert density_function(s15, 1) != density_function(moved, 1)
        assert not fingerprints_equal(s15, moved)

    def test_primitive_reduction_folds_fingerprint(self, tri):
        doubled = new_sequence(2, [0, F(1, 3), F(1, 2), 1, F(4, 3), F(3, 2)])
        assert fingerprints_equal(doubled, tri)
        assert not fingerprints_equal(doubled, tri, reduce_primitive=False)

    def test_rescale_toggle(self, tri):
        stretched = new_sequence(2, [0, F(2, 3), 1])
        assert fingerprints_equal(stretched, tri)
        assert not fingerprints_equal(stretched, tri, rescale=False)

    @given(unit_sequences(), st.fractions(min_value=-1, max_value=1, max_denominator=24))
    @settings(deadline=None, max_examples=40)
    def test_isometry_invariance(self, seq, offset):
        assert fingerprints_equal(seq, seq.translate(offset).reflect())


class TestSymmetry:
    def test_three_points(self, tri):
        assert symmetry_report(tri) == ((0, True), (1, True))

    def test_s15_all_true(self, s15):
        assert symmetry_report(s15) == tuple((k, True) for k in range(5))

    def test_single_point(self):
        assert symmetry_report(new_sequence(1, [0])) == ((0, True),)

    @given(unit_sequences())
    @settings(deadline=None, max_examples=40)
    def test_random(self, seq):
        assert all(ok for _, ok in symmetry_report(seq))


class TestReport:
    def test_report_bundles_match(self, tri):
        rep = density_report(tri, 2)
        assert rep.k == 2
        assert rep.area == rep.density.integral()
        assert len(rep.triples) == 3
        assert density_report(tri, 0).triples == ()


def test_fig3_nonshared_trapezoid_sums(s15, q15):
    """The six non-shared 4-fold trapezoids of each sequence sum to the same
    function, with the documented values at half-integer radii (cell units)."""
    expected_vals = {F(5, 2): 2, F(3): 5, F(7, 2): 6, F(4): 4, F(9, 2): 1}
    sums = []
    s_triples = Counter(t.normalized() for t in trapezoid_triples(s15, 4))
    q_triples = Counter(t.normalized() for t in trapezoid_triples(q15, 4))
    shared = s_triples & q_triples
    assert shared == Counter(
        {
            TrapezoidTriple(F(1), F(4), F(2)): 1,
            TrapezoidTriple(F(1), F(5), F(2)): 1,
            TrapezoidTriple(F(1), F(6), F(2)): 1,
        }
    )
    for triples in (s_triples - shared, q_triples - shared):
        assert sum(triples.values()) == 6
        f = sum_functions(trapezoid(t) for t in triples.elements())
        sums.append(f)
        for t, v in expected_vals.items():
            assert f.value_at(t) == v
    assert sums[0] == sums[1]
