import math
from fractions import Fraction

import numpy as np
import pytest

from sympineq.majorize import (majorizes, psi_compare, psi_sum, psi_value,
                               s_r_limit_estimate, schur_ostrowski_sample,
                               t_transform_pair, theorem2_scan)
from sympineq.vectors import RationalVector, partial_sums_desc

from conftest import random_rational_vector


def vec(*entries):
    return RationalVector(entries)


# the interval matrix pair's non-majorizing cousin: equal sums, equal product,
# larger maximum, but the second partial sum dips below
PROBE_X = vec(4, "19/10", "11/10")
PROBE_Y = vec(3, 3, 1)


class TestMajorizes:
    def test_basic(self):
        assert majorizes(vec(3, 1), vec(2, 2)).holds

    def test_reflexive(self):
        x = vec(5, "1/3", 2)
        assert majorizes(x, x).holds

    def test_probe_pair_fails_at_second_partial_sum(self):
        verdict = majorizes(PROBE_X, PROBE_Y)
        assert not verdict.holds
        assert verdict.sum_equal
        assert verdict.first_violation == (2, Fraction(59, 10), Fraction(6))

    def test_unequal_sums(self):
        verdict = majorizes(vec(2, 1), vec(1, 1))
        assert not verdict.holds
        assert not verdict.sum_equal

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            majorizes(vec(1), vec(1, 2))

    def test_partial_order_properties(self, rng):
        for _ in range(40):
            n = rng.randint(2, 5)
            x, y = t_transform_pair(rng, n)
            _, z = t_transform_pair(rng, n)
            assert majorizes(x, y).holds
            # antisymmetry up to permutation
            if majorizes(y, x).holds:
                assert x.sorted_desc() == y.sorted_desc()
            # transitivity along a second transform chain started at y
            y2 = t_transform_pair_from(rng, y)
            assert majorizes(y, y2).holds
            assert majorizes(x, y2).holds


def t_transform_pair_from(rng, start):
    # one extra Robin Hood step applied to an existing vector
    ys = list(start.entries)
    if len(ys) >= 2:
        i, j = rng.sample(range(len(ys)), 2)
        if ys[i] != ys[j]:
            if ys[i] < ys[j]:
                i, j = j, i
            delta = (ys[i] - ys[j]) * Fraction(rng.randint(0, 8), 16)
            ys[i] -= delta
            ys[j] += delta
    return RationalVector(ys)


class TestSchurOstrowski:
    def test_elementary_gradient_quotient(self):
        verdict = schur_ostrowski_sample("F", vec(1, 2, 3), k=2, r=1)
        assert verdict.ok and verdict.exact
        assert verdict.pairs_checked == 3

    def test_subset_power_runs_convex(self):
        verdict = schur_ostrowski_sample("M", vec(1, 2), k=2, r=1)
        assert verdict.ok
        # raw quotient is about -2; stored signed in the certifying direction
        assert verdict.worst_quotient == pytest.approx(2.0, rel=1e-3)

    def test_degenerate_point_passes_vacuously(self):
        verdict = schur_ostrowski_sample("F", vec(2, 2, 2), k=3, r=2)
        assert verdict.ok and verdict.pairs_checked == 0

    def test_exact_sweep_order_two(self, rng):
        for _ in range(60):
            x = random_rational_vector(rng, 3, max_numerator=30,
                                       denominator_bound=3)
            verdict = schur_ostrowski_sample("F", x, k=4, r=2)
            assert verdict.ok

    def test_fd_sweeps(self, rng):
        for _ in range(10):
            x = random_rational_vector(rng, 3, max_numerator=9,
                                       denominator_bound=2)
            assert schur_ostrowski_sample("G", x, k=3, r=2).ok
            assert schur_ostrowski_sample("M", x, k=3, r=2).ok

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            schur_ostrowski_sample("E", vec(1, 2), 1, 1)


class TestTheorem2Scan:
    def test_majorizing_pair_has_no_violations(self):
        rep = theorem2_scan(vec(3, 1), vec(2, 2), 6)
        assert rep.majorization_holds
        assert rep.distinct_var_violation is None
        assert rep.subset_power_violation is None

    def test_equal_vectors(self):
        x = vec(1, 2, 3)
        rep = theorem2_scan(x, x, 5)
        assert rep.majorization_holds
        assert rep.distinct_var_violation is None
        assert rep.subset_power_violation is None

    def test_probe_pair_violations_appear_beyond_k_eight(self):
        # no family violation is visible at k_max = 8 ...
        rep8 = theorem2_scan(PROBE_X, PROBE_Y, 8)
        assert not rep8.majorization_holds
        assert rep8.subset_power_violation is None
        assert rep8.distinct_var_violation is None
        # ... the first subset-power violation sits at (r=2, k=11)
        rep = theorem2_scan(PROBE_X, PROBE_Y, 16)
        assert not rep.majorization_holds
        v = rep.subset_power_violation
        assert (v.r, v.k) == (2, 11)
        assert v.lhs < v.rhs
        g = rep.distinct_var_violation
        assert (g.r, g.k) == (3, 10)
        assert g.lhs > g.rhs

    def test_unequal_sums_not_applicable(self):
        rep = theorem2_scan(vec(2, 1), vec(1, 1), 5)
        assert not rep.sums_equal
        assert rep.majorization is None
        assert rep.cells_checked == 0

    def test_majorization_implies_family_directions(self, rng):
        for _ in range(50):
            n = rng.randint(2, 5)
            x, y = t_transform_pair(rng, n)
            rep = theorem2_scan(x, y, 8)
            assert rep.majorization_holds
            assert rep.distinct_var_violation is None
            assert rep.subset_power_violation is None


class TestSubsetPowerLimit:
    def test_converges_from_above(self):
        x = vec(1, 2, 3)
        estimates = s_r_limit_estimate(x, 2, 40)
        target = float(partial_sums_desc(x)[1])
        assert all(e >= target - 1e-9 for e in estimates)
        assert estimates[-1] == pytest.approx(target, abs=1e-2)

    def test_full_subset_is_exactly_the_total(self):
        x = vec(4, 2, 1, 2)
        for e in s_r_limit_estimate(x, 4, 10):
            assert e == pytest.approx(9.0, rel=1e-12)

    def test_largest_entry_limit(self):
        got = s_r_limit_estimate(vec(4, 2, 1, 2), 1, 40)[-1]
        assert got == pytest.approx(4.0, abs=1e-2)


class TestPsi:
    def test_below_threshold(self):
        assert psi_sum(vec(1, 1), 2) == pytest.approx(2.0, abs=1e-15)

    def test_log_branch(self):
        x = RationalVector([2 * math.e])
        assert psi_sum(x, 2) == pytest.approx(4.0, rel=1e-12)

    def test_zero_entry(self):
        assert psi_sum(vec(0), 5) == 0.0

    def test_lambda_must_be_positive(self):
        with pytest.raises(ValueError):
            psi_sum(vec(1), 0)

    def test_concave_nondecreasing(self):
        lam = 1.5
        grid = [0.05 * i for i in range(1, 200)]
        values = [psi_value(s, lam) for s in grid]
        diffs = [b - a for a, b in zip(values, values[1:])]
        assert all(d >= -1e-12 for d in diffs)
        assert all(b <= a + 1e-9 for a, b in zip(diffs, diffs[1:]))

    def test_compare_equal_vectors(self):
        x = vec(1, "5/2", 4)
        rows = psi_compare(x, x, [0.5, 1, 2])
        assert all(r.holds and r.lhs == r.rhs for r in rows)

    def test_large_lambda_reduces_to_sums(self):
        rows = psi_compare(vec(2, 0), vec(1, 1), [100])
        assert rows[0].lhs == pytest.approx(rows[0].rhs, rel=1e-12)
        assert rows[0].holds

    def test_spectral_pair_probe(self, matrix_x, matrix_y):
        # the example spectra satisfy the polynomial hypotheses only up to
        # order 2, and indeed the concave probe genuinely fails for small
        # lambda while holding from lambda = 1 up
        ex = np.linalg.eigvalsh(np.array(matrix_x, dtype=float))
        ey = np.linalg.eigvalsh(np.array(matrix_y, dtype=float))
        x = RationalVector([max(0.0, float(v)) for v in ex])
        y = RationalVector([max(0.0, float(v)) for v in ey])
        rows = psi_compare(x, y, [Fraction(1, 4), Fraction(1, 2), 1, 2, 4])
        outcome = {r.lam: r.holds for r in rows}
        assert outcome == {0.25: False, 0.5: False, 1.0: True, 2.0: True,
                           4.0: True}


class TestTTransformPairs:
    def test_always_majorize(self, rng):
        for _ in range(100):
            x, y = t_transform_pair(rng, rng.randint(1, 5))
            assert majorizes(x, y).holds
