import doctest
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

import roofpairs.gradedring as gradedring
from roofpairs.gradedring import (
    ChernVector,
    GradedClass,
    GradedRingError,
    IncompatibleRingError,
    InvalidDimensionError,
    chern_twist,
    integrate,
    make_quadric_ring,
    multiply,
    validate_mukai_pair,
)

Q5 = make_quadric_ring(5)
Q6 = make_quadric_ring(6)


def test_doctests():
    failures, _ = doctest.testmod(gradedring)
    assert failures == 0


class TestQuadricRings:
    def test_invalid_dimension(self):
        with pytest.raises(InvalidDimensionError):
            make_quadric_ring(1)

    def test_q5_half_point_relation(self):
        # L^3 = 2*Pi and Pi*L^2 is the point class
        assert Q5.l_power(3) == Q5.basis_class("Pi") * 2
        assert Q5.point_label == "Pi*L^2"

    def test_q5_top_power(self):
        # L^5 = 2 * point, expanded through the table (spec oracle: L^2 * (2Pi))
        l = Q5.l_power(1)
        five = l * l * l * l * l
        assert five == Q5.basis_class("Pi*L^2") * 2

    def test_q6_middle_class_relations(self):
        pi1, pi2 = Q6.basis_class("Pi1"), Q6.basis_class("Pi2")
        point = Q6.basis_class(Q6.point_label)
        assert Q6.l_power(3) == pi1 + pi2
        assert (pi1 * Q6.l_power(1)) == (pi2 * Q6.l_power(1))
        assert (pi1 * pi1).is_zero and (pi2 * pi2).is_zero
        assert pi1 * pi2 == point

    def test_q4_parity_rule(self):
        q4 = make_quadric_ring(4)
        pi1, pi2 = q4.basis_class("Pi1"), q4.basis_class("Pi2")
        point = q4.basis_class(q4.point_label)
        assert pi1 * pi1 == point and pi2 * pi2 == point
        assert (pi1 * pi2).is_zero

    @pytest.mark.parametrize("dim", range(2, 11))
    def test_construction_across_dimensions(self, dim):
        # construction revalidates gradedness/associativity; top integral is the degree
        ring = make_quadric_ring(dim)
        assert integrate(ring.l_power(dim)) == 2
        assert integrate(ring.hyperplane * ring.l_power(dim - 1)) == 2

    @pytest.mark.parametrize("ring", [Q5, Q6], ids=["Q5", "Q6"])
    def test_table_laws_all_triples(self, ring):
        labels = [b.label for b in ring.basis]
        for x, y in product(labels, repeat=2):
            assert ring.basis_product(x, y) == ring.basis_product(y, x)
        for x, y, z in product(labels, repeat=3):
            left = ring._combo_times_label(ring.basis_product(x, y), z)
            right = ring._combo_times_label(ring.basis_product(y, z), x)
            assert left == right


class TestMultiply:
    def test_forced_by_relation(self):
        assert Q5.l_power(1) * Q5.l_power(2) == Q5.basis_class("Pi") * 2

    def test_pi_squared_even(self):
        assert (Q6.basis_class("Pi1") * Q6.basis_class("Pi1")).is_zero

    def test_degree_overflow_is_zero(self):
        pi = Q5.basis_class("Pi")
        prod = multiply(pi, pi)
        assert prod.is_zero and prod.degree == 6

    def test_ring_mismatch(self):
        other = make_quadric_ring(5)
        with pytest.raises(IncompatibleRingError):
            multiply(Q5.basis_class("Pi"), other.basis_class("Pi"))

    def test_degree_mismatch_add(self):
        with pytest.raises(GradedRingError):
            Q5.l_power(1) + Q5.l_power(2)


class TestIntegrate:
    def test_point_normalization(self):
        assert integrate(Q5.basis_class("Pi") * Q5.l_power(2)) == 1

    def test_degree_of_quadric(self):
        assert integrate(Q5.l_power(5)) == 2
        assert integrate(Q6.l_power(6)) == 2

    def test_below_top_degree(self):
        assert integrate(Q5.l_power(3)) == 0

    def test_q6_middle_classes(self):
        pi1, pi2 = Q6.basis_class("Pi1"), Q6.basis_class("Pi2")
        assert integrate(pi1 * pi2) == 1
        assert integrate(pi1 * pi1) == 0


def ottaviani_chern():
    return ChernVector(3, (Q5.l_power(1) * 2, Q5.l_power(2) * 2, Q5.basis_class("Pi") * 2))


class TestChernTwist:
    def test_twist_by_one(self):
        twisted = chern_twist(ottaviani_chern(), 1)
        assert twisted.components[0] == Q5.l_power(1) * 5
        assert twisted.components[1] == Q5.l_power(2) * 9
        assert twisted.components[2] == Q5.basis_class("Pi") * 12

    def test_zero_twist_is_identity(self):
        c = ottaviani_chern()
        assert chern_twist(c, 0).components == c.components

    def test_line_bundle(self):
        c = ChernVector(1, (Q5.zero(1),))
        assert chern_twist(c, 1).components[0] == Q5.l_power(1)

    @pytest.mark.parametrize("s,t", [(1, 1), (2, -1), (-3, 5), (0, 4), (-2, -2)])
    def test_composition(self, s, t):
        c = ottaviani_chern()
        once = chern_twist(chern_twist(c, s), t)
        combined = chern_twist(c, s + t)
        assert once.components == combined.components


class TestMukaiPairPredicate:
    def test_twisted_ottaviani(self):
        assert validate_mukai_pair(chern_twist(ottaviani_chern(), 1), Q5)

    def test_even_side(self):
        c = ChernVector(4, (
            Q6.l_power(1) * 6,
            Q6.l_power(2) * 14,
            Q6.basis_class("Pi1") * 14 + Q6.basis_class("Pi2") * 16,
            Q6.basis_class("Pi1*L") * 12,
        ))
        assert validate_mukai_pair(c, Q6)

    def test_index_mismatch(self):
        c = ChernVector(3, (Q5.l_power(1) * 4, Q5.l_power(2) * 9, Q5.basis_class("Pi") * 12))
        assert not validate_mukai_pair(c, Q5)


coeff = st.integers(min_value=-9, max_value=9)


@st.composite
def integral_class(draw, ring, degree):
    labels = ring.degree_labels.get(degree, ())
    coeffs = {lbl: Fraction(draw(coeff)) for lbl in labels}
    return GradedClass(ring, degree, coeffs)


@given(
    a=integral_class(Q6, 2),
    b=integral_class(Q6, 3),
    c=integral_class(Q6, 3),
)
def test_integrality_closed_and_bilinear(a, b, c):
    assert (a * b).is_integral
    assert (a + a).is_integral
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
