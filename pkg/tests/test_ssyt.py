"""Semistandard tableaux, Bender-Knuth involutions, and promotion."""
from fractions import Fraction

import pytest

from homomesy.engine import check_homomesy, iterate_orbit
from homomesy.gallery.ssyt import (
    SSYT,
    all_cells,
    bender_knuth,
    cell_sum_statistic,
    centrally_symmetric_cell_sets,
    promotion_orbit_sums,
    rect_tableaux,
    ssyt_promotion,
)
from homomesy.guards import GuardExceeded


def T(ceiling, *rows):
    return SSYT(ceiling, tuple(tuple(r) for r in rows))


class TestValidation:
    def test_accepts_a_valid_tableau(self):
        t = T(4, (1, 1, 2), (2, 3, 4))
        assert t.shape == (2, 3)
        assert t.entry(2, 3) == 4

    def test_rows_must_weakly_increase(self):
        with pytest.raises(ValueError, match="weakly"):
            T(4, (2, 1), (3, 4))

    def test_columns_must_strictly_increase(self):
        with pytest.raises(ValueError, match="strictly"):
            T(4, (1, 1), (1, 2))

    def test_entries_within_ceiling(self):
        with pytest.raises(ValueError, match="1..ceiling"):
            T(3, (1, 4))
        with pytest.raises(ValueError, match="1..ceiling"):
            T(3, (0, 1))

    def test_rectangle_required(self):
        with pytest.raises(ValueError, match="same length"):
            T(3, (1, 1), (2,))
        with pytest.raises(ValueError, match="nonempty"):
            SSYT(3, ())

    def test_entry_bounds(self):
        t = T(3, (1, 2))
        with pytest.raises(ValueError, match="outside"):
            t.entry(2, 1)


class TestBenderKnuth:
    def test_index_range(self):
        t = T(3, (1, 2))
        with pytest.raises(ValueError, match="outside"):
            bender_knuth(t, 3)
        with pytest.raises(ValueError, match="outside"):
            bender_knuth(t, 0)

    def test_free_entries_swap(self):
        # no vertical contact: the lone 1 and the two 2s trade multiplicities
        t = T(3, (1, 2, 2))
        assert bender_knuth(t, 1).rows == ((1, 1, 2),)

    def test_locked_pairs_stay(self):
        # the column 1-over-2 is locked; nothing changes
        t = T(2, (1, 1), (2, 2))
        assert bender_knuth(t, 1) == t

    @pytest.mark.parametrize("nrows,ncols,ceiling", [(2, 2, 4), (2, 3, 4), (1, 3, 3)])
    def test_is_an_involution(self, nrows, ncols, ceiling):
        for t in rect_tableaux(nrows, ncols, ceiling):
            for i in range(1, ceiling):
                image = bender_knuth(t, i)
                assert image.shape == t.shape
                assert bender_knuth(image, i) == t

    def test_swaps_letter_multiplicities(self):
        for t in rect_tableaux(2, 3, 4):
            for i in range(1, 4):
                flat = [v for row in bender_knuth(t, i).rows for v in row]
                old = [v for row in t.rows for v in row]
                assert flat.count(i) == old.count(i + 1)
                assert flat.count(i + 1) == old.count(i)


class TestEnumeration:
    @pytest.mark.parametrize("ceiling,count", [(2, 1), (3, 6), (4, 20), (5, 50)])
    def test_counts_2_by_2(self, ceiling, count):
        assert len(rect_tableaux(2, 2, ceiling)) == count

    @pytest.mark.parametrize("ceiling,count", [(2, 1), (3, 10), (4, 50), (5, 175)])
    def test_counts_2_by_3(self, ceiling, count):
        assert len(rect_tableaux(2, 3, ceiling)) == count

    def test_empty_when_ceiling_below_rows(self):
        assert rect_tableaux(3, 2, 2) == []

    def test_lexicographic_order(self):
        tableaux = rect_tableaux(2, 2, 3)
        assert tableaux == sorted(tableaux)
        assert tableaux[0].rows == ((1, 1), (2, 2))

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            rect_tableaux(2, 3, 5, guard=100)


class TestPromotion:
    def test_reference_orbit_in_ceiling_5(self):
        start = T(5, (1, 1, 2), (2, 3, 4))
        orbit = iterate_orbit(ssyt_promotion, start)
        assert orbit.period == 5
        assert [t.rows for t in orbit.states] == [
            ((1, 1, 2), (2, 3, 4)),
            ((1, 1, 3), (2, 5, 5)),
            ((1, 2, 4), (4, 5, 5)),
            ((1, 3, 4), (3, 4, 5)),
            ((2, 2, 3), (3, 4, 5)),
        ]

    @pytest.mark.parametrize("nrows,ncols,ceiling",
                             [(2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 2, 5),
                              (2, 3, 3), (2, 3, 4), (2, 3, 5), (1, 4, 3)])
    def test_order_divides_ceiling(self, nrows, ncols, ceiling):
        for t in rect_tableaux(nrows, ncols, ceiling):
            current = t
            for _ in range(ceiling):
                current = ssyt_promotion(current)
            assert current == t

    def test_promotion_is_generally_nontrivial(self):
        t = T(3, (1, 1), (2, 3))
        assert ssyt_promotion(t) != t


class TestCellStatistics:
    def test_cell_sum(self):
        stat = cell_sum_statistic([(1, 1), (2, 3)])
        assert stat.name == "cells:1,1;2,3"
        assert stat(T(4, (1, 1, 2), (2, 3, 4)))[0] == 5

    def test_custom_name_and_empty_set(self):
        assert cell_sum_statistic([], name="nothing").name == "nothing"
        assert cell_sum_statistic([]).name == "cells:none"

    def test_all_cells(self):
        assert all_cells(2, 2) == ((1, 1), (1, 2), (2, 1), (2, 2))

    def test_centrally_symmetric_sets(self):
        sets = centrally_symmetric_cell_sets(2, 2)
        assert len(sets) == 4  # two rotation pairs
        assert () in sets
        assert tuple(all_cells(2, 2)) in sets
        for cells in sets:
            rotated = {(3 - r, 3 - c) for r, c in cells}
            assert rotated == set(cells)
        assert len(centrally_symmetric_cell_sets(2, 3)) == 8

    def test_promotion_orbit_sums(self):
        start = T(5, (1, 1, 2), (2, 3, 4))
        corner = promotion_orbit_sums(start, [(1, 1), (2, 3)])
        assert corner == (5, 6, 6, 6, 7)
        assert promotion_orbit_sums(start, [(1, 3), (2, 1)]) == (4, 5, 8, 7, 6)
        assert promotion_orbit_sums(start, all_cells(2, 3)) == (13, 17, 21, 20, 19)


class TestRotationInvariantHomomesy:
    @pytest.mark.parametrize("nrows,ncols,ceiling", [(2, 2, 3), (2, 2, 4), (2, 3, 4)])
    def test_symmetric_cell_sums_are_homomesic(self, nrows, ncols, ceiling):
        space = rect_tableaux(nrows, ncols, ceiling)
        for cells in centrally_symmetric_cell_sets(nrows, ncols):
            report = check_homomesy(ssyt_promotion, space, cell_sum_statistic(cells))
            assert report.homomesic
            assert report.c == (Fraction(len(cells) * (ceiling + 1), 2),)

    def test_asymmetric_cell_sums_need_not_be(self):
        space = rect_tableaux(2, 3, 5)
        report = check_homomesy(ssyt_promotion, space, cell_sum_statistic([(1, 1)]))
        assert not report.homomesic
