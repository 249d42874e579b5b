"""Closed-form builders, certified by the brute-force verifier."""

import pytest

from mixla import (
    LevelProfile,
    is_locating,
    is_mca2_star,
    is_pdimoa_star,
    lower_bound,
    moa_indices,
)
from mixla.direct import (
    build_la_1_w,
    build_la_2_3,
    build_oa_sum,
    build_pdimoa_star_general,
    build_pdimoa_star_t_plus_1,
    full_factorial,
)


class TestOaSum:
    def test_parity_rows(self):
        a = build_oa_sum(2, 2)
        assert a.row_tuples() == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]

    @pytest.mark.parametrize("v,t", [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)])
    def test_every_index_is_one(self, v, t):
        a = build_oa_sum(v, t)
        assert a.n_rows == v**t
        assert all(lam == 1 for lam in moa_indices(a, t).lambdas)

    def test_rejects_small_parameters(self):
        with pytest.raises(ValueError, match="v=1"):
            build_oa_sum(1, 2)
        with pytest.raises(ValueError, match="t=1"):
            build_oa_sum(3, 1)


class TestPdimoaTPlus1:
    def test_published_parameters(self, moa246):
        a = build_pdimoa_star_t_plus_1((2, 4, 6))
        assert a.n_rows == 24
        assert a.levels == (2, 4, 6)
        assert is_pdimoa_star(a, 2).verdict
        # row-wise it may differ from the published instance, but the
        # indices are forced to coincide
        assert moa_indices(a, 2).as_dict() == moa_indices(moa246, 2).as_dict()

    def test_divisibility_is_necessary(self):
        with pytest.raises(ValueError, match="divisible"):
            build_pdimoa_star_t_plus_1((2, 4, 7))

    def test_three_six_nine(self):
        a = build_pdimoa_star_t_plus_1((3, 6, 9))
        assert a.n_rows == 54
        assert is_pdimoa_star(a, 2).verdict

    def test_strength_three(self):
        a = build_pdimoa_star_t_plus_1((2, 4, 6, 8))
        assert a.n_rows == 4 * 6 * 8
        assert is_pdimoa_star(a, 3).verdict

    def test_rejects_nonincreasing(self):
        with pytest.raises(ValueError, match="strictly increasing"):
            build_pdimoa_star_t_plus_1((2, 4, 4))


class TestPdimoaGeneral:
    def test_distinct_product_profile(self):
        a = build_pdimoa_star_general((2, 3, 12, 30), 2)
        assert a.n_rows == 360
        assert is_pdimoa_star(a, 2).verdict
        assert is_locating(a, 2, 1, barred=True).verdict
        assert a.n_rows == lower_bound(LevelProfile((2, 3, 12, 30), 2)).value

    def test_colliding_products_cannot_reach_distinct_indices(self):
        # 2*18 == 3*12, so subsets {1,4} and {2,3} share an index in every
        # orthogonal array over this profile; the construction still yields
        # an optimal locating array of the floor size
        a = build_pdimoa_star_general((2, 3, 12, 18), 2)
        assert a.n_rows == 216
        indices = moa_indices(a, 2)
        assert indices[(1, 4)] == indices[(2, 3)] == 6
        assert not is_pdimoa_star(a, 2).verdict
        assert is_locating(a, 2, 1, barred=True).verdict
        assert a.n_rows == lower_bound(LevelProfile((2, 3, 12, 18), 2)).value

    def test_reduces_to_t_plus_1(self):
        assert build_pdimoa_star_general((2, 4, 6), 2) == (
            build_pdimoa_star_t_plus_1((2, 4, 6))
        )

    def test_rejects_equal_levels(self):
        with pytest.raises(ValueError, match="strictly increasing"):
            build_pdimoa_star_general((2, 3, 12, 12), 2)

    def test_rejects_bad_multiple(self):
        with pytest.raises(ValueError, match="multiple"):
            build_pdimoa_star_general((2, 3, 12, 20), 2)


class TestLa23:
    def test_published_forty_two_rows(self, la42):
        assert build_la_2_3(3, 6, 7) == la42

    def test_reaches_published_bound(self):
        a = build_la_2_3(2, 4, 4)
        assert a.n_rows == 16 == lower_bound(LevelProfile((2, 4, 4), 2)).value
        assert is_locating(a, 2, 1, barred=True).verdict

    def test_precondition(self):
        with pytest.raises(ValueError, match="2\\*v1"):
            build_la_2_3(2, 3, 4)

    def test_exactly_once_structure(self):
        # singleton coverage on the top column pair, doubled elsewhere
        a = build_la_2_3(3, 6, 7)
        assert is_mca2_star(a, 2).verdict


class TestLa1W:
    def test_smallest_instance_rows(self):
        a = build_la_1_w(2, 4)
        assert a.row_tuples() == [(0, 0, 0), (1, 1, 1), (0, 1, 2), (1, 0, 3)]
        assert is_locating(a, 1, 1, barred=True).verdict

    def test_extra_rows_cover_tail_symbols(self):
        a = build_la_1_w(2, 5)
        assert a.n_rows == 5
        assert [r[-1] for r in a.row_tuples()] == [0, 1, 2, 3, 4]
        assert is_locating(a, 1, 1, barred=True).verdict

    def test_precondition(self):
        with pytest.raises(ValueError, match="2w"):
            build_la_1_w(3, 5)

    def test_meets_bound(self):
        for w, v in [(2, 4), (2, 7), (3, 6), (4, 9)]:
            a = build_la_1_w(w, v)
            assert a.n_rows == v == lower_bound(a.profile).value


class TestFullFactorial:
    def test_row_count_and_coverage(self):
        a = full_factorial((2, 3), 2)
        assert a.n_rows == 6
        assert len(set(a.row_tuples())) == 6
