"""Euler characteristic formulas and correction sums."""

from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logdgen.duval import delpezzo_catalog, exceptional_euler
from logdgen.eulerform import (
    ChiInput,
    FibreComponentData,
    chi_structure_sheaf,
    euler_degenerate_fibre,
    noether_e_top,
    orbifold_euler,
    rank_one_square,
    rr_correction_cyclic,
    rr_correction_sum,
    type3_numerology,
)


class TestOrbifoldEuler:
    def test_spec_examples(self):
        assert orbifold_euler(3, [2]) == F(5, 2)
        assert orbifold_euler(0, []) == 0
        assert orbifold_euler(3, [3, 3, 3]) == 1

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            orbifold_euler(3, [0])

    def test_order_one_points_are_invisible(self):
        assert orbifold_euler(7, [1, 1, 1]) == 7


class TestRRCorrection:
    def test_spec_examples(self):
        assert rr_correction_cyclic(5, 2, 1) == F(-3, 5)
        assert rr_correction_cyclic(2, 1, 1) == F(-1, 4)
        assert rr_correction_cyclic(3, 1, 3) == 0

    def test_coprimality_enforced(self):
        with pytest.raises(ValueError):
            rr_correction_cyclic(6, 2, 1)
        with pytest.raises(ValueError):
            rr_correction_sum(6, 3, 6)

    def test_sum_spec_examples(self):
        assert rr_correction_sum(5, 2, 5) == -2
        assert rr_correction_sum(2, 1, 2) == F(-1, 4)
        assert rr_correction_sum(1, 1, 3) == 0

    def test_divisibility_enforced(self):
        with pytest.raises(ValueError):
            rr_correction_sum(3, 1, 4)

    @given(st.integers(1, 30), st.integers(1, 3), st.data())
    @settings(max_examples=60, deadline=None)
    def test_closed_form(self, r, mult, data):
        units = [a for a in range(1, r + 1) if gcd(a, r) == 1]
        a = data.draw(st.sampled_from(units))
        m = mult * r
        assert rr_correction_sum(r, a, m) == F(-m * (r * r - 1), 12 * r)

    @given(st.integers(2, 25), st.data())
    @settings(max_examples=40, deadline=None)
    def test_shift_invariance(self, r, data):
        units = [a for a in range(1, r) if gcd(a, r) == 1]
        a = data.draw(st.sampled_from(units))
        l = data.draw(st.integers(0, 3 * r))
        assert rr_correction_cyclic(r, a, l) == rr_correction_cyclic(r, a + r, l)

    @given(st.integers(2, 25), st.data())
    @settings(max_examples=40, deadline=None)
    def test_twist_multiset_independent_of_a(self, r, data):
        units = [a for a in range(1, r) if gcd(a, r) == 1]
        a = data.draw(st.sampled_from(units))
        base = sorted(rr_correction_cyclic(r, 1, l) for l in range(1, r))
        this = sorted(rr_correction_cyclic(r, a, l) for l in range(1, r))
        assert this == base


class TestChiStructureSheaf:
    def test_smooth_fibre(self):
        data = ChiInput(components=[(1, F(2), F(0), F(0))])
        assert chi_structure_sheaf(data) == 2

    def test_balanced_intersection_terms_vanish(self):
        # Totals equal to the weighted sums leave only sum m_i chi_i.
        data = ChiInput(
            components=[(2, F(1), F(3), F(-1)), (1, F(-1, 2), F(0), F(2))],
            total_D_cubed=F(6),
            total_D_sq_K=F(0),
        )
        assert chi_structure_sheaf(data) == 2 * 1 + F(-1, 2)

    def test_correction_shift(self):
        base = ChiInput(components=[(1, F(1), F(0), F(0))])
        with_corr = ChiInput(
            components=[(1, F(1), F(0), F(0))],
            corrections=[(2, [F(-3, 4)])],
        )
        v = chi_structure_sheaf(base, generalized=True)
        assert chi_structure_sheaf(with_corr, generalized=True) == v + F(1, 8)

    def test_plain_equals_generalized_without_corrections(self):
        data = ChiInput(
            components=[(3, F(1, 3), F(2), F(-5))],
            total_D_cubed=F(7),
            total_D_sq_K=F(1, 2),
        )
        assert chi_structure_sheaf(data, False) == chi_structure_sheaf(data, True)

    def test_empty_divisor_rejected(self):
        with pytest.raises(ValueError):
            ChiInput(components=[])


class TestEulerDegenerateFibre:
    def test_spec_examples(self):
        assert euler_degenerate_fibre([FibreComponentData(1, F(0))]) == 0
        comps = [FibreComponentData(2, F(3), [F(1, 2)]), FibreComponentData(1, F(0))]
        assert euler_degenerate_fibre(comps) == 7

    def test_zero_exactly_when_all_contributions_vanish(self):
        flat = [FibreComponentData(m, F(0), [F(0)] * 2) for m in (1, 2, 3)]
        assert euler_degenerate_fibre(flat) == 0
        bumped = flat + [FibreComponentData(1, F(0), [F(1, 7)])]
        assert euler_degenerate_fibre(bumped) > 0

    def test_linearity_in_components(self):
        a = FibreComponentData(2, F(5, 2), [F(1, 3)])
        b = FibreComponentData(3, F(-1), [F(2)])
        total = euler_degenerate_fibre([a, b])
        assert total == euler_degenerate_fibre([a]) + euler_degenerate_fibre([b])

    def test_negative_delta_rejected(self):
        with pytest.raises(ValueError):
            FibreComponentData(1, F(0), [F(-1, 2)])


class TestNoether:
    def test_spec_examples(self):
        assert noether_e_top(2, 0, []) == 24
        assert noether_e_top(0, 0, []) == 0
        assert noether_e_top(1, 8, [2]) == 3

    def test_table_rows_reproduce_catalog_euler_part(self):
        # For every catalog surface: 12 - d - (number of exceptional
        # curves) computed through Noether's equality with chi = 1.
        for entry in delpezzo_catalog():
            e_p = [exceptional_euler(t) for t in entry.singularities]
            expected = 12 - entry.degree - sum(t.curve_count for t in entry.singularities)
            assert noether_e_top(1, entry.degree, e_p) == expected, entry


class TestType3Numerology:
    def test_spec_examples(self):
        assert type3_numerology("3A_2", 1, 1) == 3
        assert type3_numerology("4A_1", 1, 2) == 4
        assert type3_numerology("A_1+2A_3", 2, 0) == 1

    def test_remaining_pattern(self):
        assert type3_numerology("A_1+A_2+A_5", 1, 1) == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            type3_numerology("2A_2", 1, 1)
        with pytest.raises(ValueError):
            type3_numerology("3A_2", 0, 1)
        with pytest.raises(ValueError):
            type3_numerology("3A_2", 1, 3)


class TestRankOneSquare:
    def test_spec_examples(self):
        assert rank_one_square(2, 2) == 4
        assert rank_one_square(4, 2) == 2
        assert rank_one_square(9, 0) == 0

    def test_rational_inputs(self):
        assert rank_one_square(3, F(3, 2)) == F(3, 2)

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            rank_one_square(0, 1)
