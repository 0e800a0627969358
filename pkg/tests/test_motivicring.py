import doctest

import pytest
from hypothesis import given, strategies as st

import roofpairs.motivicring as motivicring
from roofpairs.motivicring import (
    B,
    B_TILDE,
    L,
    InvalidRankError,
    MotivicPoly,
    Y,
    Y_TILDE,
    fibration_class,
    l_equivalence_residual,
    proj_class,
)


def test_doctests():
    failures, _ = doctest.testmod(motivicring)
    assert failures == 0


class TestProjClass:
    def test_point(self):
        assert proj_class(0) == MotivicPoly.const(1)

    def test_plane(self):
        assert proj_class(2) == 1 + L + L ** 2

    @pytest.mark.parametrize("k", range(0, 8))
    def test_telescoping(self, k):
        assert proj_class(k) * (L - 1) == L ** (k + 1) - 1

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            proj_class(-1)


class TestFibrationClass:
    def test_rank_two(self):
        assert fibration_class(2) == B + L * Y

    def test_rank_three(self):
        assert fibration_class(3) == (1 + L + L ** 2) * Y + (1 + L) * (B - Y)

    @pytest.mark.parametrize("r", range(2, 8))
    def test_surface_equals_base_collapse(self, r):
        collapsed = fibration_class(r).substitute({"Y": B})
        assert collapsed == proj_class(r - 2) * B + L ** (r - 1) * B

    def test_rank_one_rejected(self):
        with pytest.raises(InvalidRankError):
            fibration_class(1)


class TestResidual:
    @pytest.mark.parametrize("r", range(2, 13))
    def test_contract_identity(self, r):
        expected = (Y - Y_TILDE) * L ** (r - 1) + proj_class(r - 2) * (B - B_TILDE)
        assert l_equivalence_residual(r) == expected

    def test_rank_three_form(self):
        assert l_equivalence_residual(3) == (Y - Y_TILDE) * L ** 2 + (1 + L) * (B - B_TILDE)

    def test_rank_four_form(self):
        assert l_equivalence_residual(4) == \
            (Y - Y_TILDE) * L ** 3 + (1 + L + L ** 2) * (B - B_TILDE)

    @pytest.mark.parametrize("r", range(2, 13))
    def test_isomorphic_bases_case(self, r):
        collapsed = l_equivalence_residual(r).substitute({"Bt": B})
        assert collapsed == (Y - Y_TILDE) * L ** (r - 1)


monomials = st.tuples(*(st.integers(0, 3) for _ in range(6)))
polys = st.builds(
    MotivicPoly,
    st.dictionaries(monomials, st.integers(-8, 8), max_size=5),
)


@given(a=polys, b=polys, c=polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MotivicPoly()
