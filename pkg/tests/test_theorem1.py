from fractions import Fraction

import pytest

from sympineq.families import f_kr_all
from sympineq.majorize import t_transform_pair
from sympineq.theorem1 import (check_hypotheses, check_hypotheses_coeffs,
                               full_report, verify_conclusions)
from sympineq.vectors import RationalVector

from conftest import random_rational_vector


def vec(*entries):
    return RationalVector(entries)


class TestHypotheses:
    def test_equal_vectors_pass_with_equality(self):
        x = vec(1, "7/2", 2)
        rep = check_hypotheses(x, x, 2)
        assert rep.all_pass and rep.sums_equal
        assert all(c.fx == c.fy for c in rep.checks)

    def test_k_range_is_r_through_nr(self):
        rep = check_hypotheses(vec(1, 2), vec(2, 1), 3)
        assert [c.k for c in rep.checks] == [3, 4, 5, 6]

    def test_two_zero_versus_ones(self):
        rep = check_hypotheses(vec(2, 0), vec(1, 1), 1)
        assert rep.all_pass and rep.sums_equal
        assert rep.checks[-1].fx == 0 and rep.checks[-1].fy == 1

    def test_coefficient_route_matches_vector_route(self, rng):
        for _ in range(10):
            n = rng.randint(1, 4)
            x = random_rational_vector(rng, n)
            y = random_rational_vector(rng, n)
            r = rng.randint(1, 3)
            direct = check_hypotheses(x, y, r)
            via_coeffs = check_hypotheses_coeffs(
                f_kr_all(x, r), f_kr_all(y, r), r, n)
            assert direct == via_coeffs

    def test_scaling_up_passes_every_order(self, rng):
        for _ in range(10):
            x = random_rational_vector(rng, rng.randint(1, 4),
                                       max_numerator=12)
            y = x.scale(Fraction(3, 2))
            for r in (1, 2, 3):
                assert check_hypotheses(x, y, r).all_pass

    def test_low_degrees_follow_from_the_top(self, rng):
        # below the order, both sides collapse to powers of the entry sum, so
        # a passing report forces the comparisons there as well
        for _ in range(20):
            n = rng.randint(2, 4)
            x, y = t_transform_pair(rng, n)
            r = rng.randint(2, 3)
            rep = check_hypotheses(x, y, r)
            assert rep.all_pass
            fx, fy = f_kr_all(x, r), f_kr_all(y, r)
            for k in range(1, r):
                assert fx[k] <= fy[k]

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            check_hypotheses(vec(1), vec(1, 2), 1)

    def test_bad_table_length(self):
        with pytest.raises(ValueError):
            check_hypotheses_coeffs([Fraction(1)], [Fraction(1)], 1, 2)


class TestConclusions:
    def test_equal_vectors_have_zero_margins(self):
        x = vec(1, 2, 3)
        rep = verify_conclusions(x, x, 2)
        assert all(pt.margin == 0.0 for pt in rep.low_grid)
        assert all(pt.margin == 0.0 for pt in rep.high_grid)
        assert rep.low_all_pass and rep.high_all_pass

    def test_grid_endpoints(self):
        rep = verify_conclusions(vec(2, 0), vec(1, 1), 3, grid_points=11)
        assert rep.low_grid[0].p == 0.0 and rep.low_grid[-1].p == 1.0
        assert rep.high_grid[0].p == 1.0 and rep.high_grid[-1].p == 4.0

    def test_high_grid_not_asserted_without_equal_sums(self):
        rep = verify_conclusions(vec(2, 1), vec(1, 1), 1)
        assert not rep.sums_equal
        assert rep.high_all_pass is None
        assert all(pt.ok is None for pt in rep.high_grid)

    def test_sums_equal_override(self):
        # callers with an exact side channel can force the high grid on
        rep = verify_conclusions(vec(2, 1), vec(2, 1), 1, sums_equal=True)
        assert rep.high_all_pass is True

    def test_small_soundness_sweep(self, rng):
        # pairs that pass the hypotheses with equal sums may not violate the
        # measured grids beyond tolerance; this is the implication itself
        checked = 0
        while checked < 20:
            n = rng.randint(2, 5)
            x, y = t_transform_pair(rng, n)
            r = rng.randint(1, 3)
            rep = check_hypotheses(x, y, r)
            if not (rep.all_pass and rep.sums_equal):
                continue
            con = verify_conclusions(x, y, r, grid_points=101, tol=1e-9)
            assert con.low_all_pass
            assert con.high_all_pass
            checked += 1


class TestFullReport:
    def test_equal_vectors_certify_the_whole_scan(self):
        x = vec(1, 2)
        rep = full_report(x, x, 3)
        assert rep.certified_r == 3
        assert rep.certified_interval == (0.0, 4.0)

    def test_two_zero_versus_ones(self):
        rep = full_report(vec(2, 0), vec(1, 1), 1)
        assert rep.certified_r == 1
        assert rep.certified_interval == (0.0, 2.0)
        assert rep.conclusions.all_asserted_pass

    def test_no_certified_order(self):
        rep = full_report(vec(1, 1), vec(2, 0), 1)
        assert rep.certified_r is None
        assert rep.conclusions is None
        assert rep.hypotheses[0].first_failure() is not None
