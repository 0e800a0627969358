from fractions import Fraction
from itertools import product

import pytest

from roofpairs import roofcalc
from roofpairs.gradedring import ChernVector, IntegralityError, integrate, make_quadric_ring
from roofpairs.roofcalc import (
    DegenerateBasisError,
    DegreeMismatchError,
    InvalidRoofError,
    RoofConfig,
    RoofSide,
    UnexpectedRankError,
    build_side_from_chern,
    cayley_rank_decomposition,
    class_from_coordinates,
    coordinates_in_lattice,
    cy_degree,
    locus_coordinates,
    locus_pushforward_class,
    middle_lattice,
    monomial,
    pairing_on_M,
    polarized_sign_check,
    pullback,
    pushforward_to_base,
    reduce,
    residue_scan,
    switch_side,
    xi_power,
)

G2_GRAM = ((0, 1, 5), (1, 10, 32), (5, 32, 82))
D4_GRAM = (
    (0, 0, 0, 1, 6),
    (0, 0, 1, 6, 22),
    (0, 1, 0, 6, 22),
    (1, 6, 6, 44, 126),
    (6, 22, 22, 126, 308),
)


class TestSideConstruction:
    def test_chern_side_reproduces_relation(self, g2):
        side = g2.side
        q5 = side.base
        assert side.groth_coeffs[0] == q5.l_power(1) * 5
        assert side.groth_coeffs[1] == q5.l_power(2) * 9
        assert side.groth_coeffs[2] == q5.basis_class("Pi") * 12
        assert side.relation_string() == "xi^3 - 5*L*xi^2 + 9*L^2*xi - 12*Pi = 0"

    def test_direct_coefficients_side(self, d4):
        assert d4.side.relation_string() == \
            "xi^4 - 6*L*xi^3 + 14*L^2*xi^2 - (14*Pi1 + 16*Pi2)*xi + 12*Pi1*L = 0"

    def test_rank_one_projectivization(self):
        q5 = make_quadric_ring(5)
        side = build_side_from_chern(q5, ChernVector(1, (q5.l_power(1),)))
        assert reduce(side, {1: q5.unit()}) == pullback(side, q5.l_power(1))

    def test_rank_exceeding_base_rejected(self):
        q5 = make_quadric_ring(5)
        comps = tuple(q5.l_power(i) for i in range(1, 7))
        with pytest.raises(InvalidRoofError):
            build_side_from_chern(q5, ChernVector(6, comps))


class TestReduceAndPushforward:
    def test_xi_cubed(self, g2):
        side = g2.side
        q5 = side.base
        cubed = xi_power(side, 3)
        assert cubed.parts[2] == q5.l_power(1) * 5
        assert cubed.parts[1] == q5.l_power(2) * -9
        assert cubed.parts[0] == q5.basis_class("Pi") * 12

    def test_identity_on_low_exponents(self, g2):
        beta = g2.side.base.basis_class("Pi")
        assert reduce(g2.side, {0: beta}) == pullback(g2.side, beta)

    def test_deep_reduction_integral(self, g2):
        cls = reduce(g2.side, {5: g2.side.base.l_power(2)})
        assert integrate(pushforward_to_base(g2.side, cls)) == 82

    def test_fiber_normalization(self, g2):
        assert pushforward_to_base(g2.side, xi_power(g2.side, 2)) == g2.side.base.unit()

    def test_pullbacks_push_to_zero(self, g2):
        beta = pullback(g2.side, g2.side.base.l_power(1))
        assert pushforward_to_base(g2.side, beta).is_zero

    def test_xi_cubed_pushforward(self, g2):
        assert pushforward_to_base(g2.side, xi_power(g2.side, 3)) == g2.side.base.l_power(1) * 5

    def test_inhomogeneous_rejected(self, g2):
        q5 = g2.side.base
        with pytest.raises(roofcalc.RoofError):
            reduce(g2.side, {0: q5.l_power(1), 1: q5.l_power(1)})


class TestPairing:
    def test_table_entries(self, g2, d4):
        s = g2.side
        assert pairing_on_M(s, monomial(s, "Pi", 0), monomial(s, "L^2", 1)) == 1
        assert pairing_on_M(s, monomial(s, "L", 2), monomial(s, "L", 2)) == 82
        t = d4.side
        assert pairing_on_M(t, monomial(t, "L^2", 2), monomial(t, "L^2", 2)) == 44

    def test_symmetry_on_all_pairs(self, g2, d4):
        for cfg in (g2, d4):
            lat = middle_lattice(cfg.side)
            for a, b in product(lat.classes, repeat=2):
                assert pairing_on_M(cfg.side, a, b) == pairing_on_M(cfg.side, b, a)

    def test_degree_mismatch(self, g2):
        s = g2.side
        with pytest.raises(DegreeMismatchError):
            pairing_on_M(s, monomial(s, "Pi", 0), monomial(s, "L", 1))


class TestMiddleLattice:
    def test_gram_3x3(self, g2):
        assert middle_lattice(g2.side).gram == G2_GRAM

    def test_gram_5x5(self, d4):
        assert middle_lattice(d4.side).gram == D4_GRAM

    def test_determinants(self, g2, d4):
        assert middle_lattice(g2.side).determinant() == -12
        assert abs(middle_lattice(d4.side).determinant()) == 12

    def test_degenerate_basis_rejected(self, g2):
        bad = RoofSide("bad", g2.side.base, 3, g2.side.groth_coeffs,
                       (("Pi", 0), ("Pi", 0), ("L", 2)))
        with pytest.raises(DegenerateBasisError):
            middle_lattice(bad)


class TestLocusClass:
    def test_gram_3x3_class(self, g2):
        cls = locus_pushforward_class(g2.side)
        assert str(cls) == "L*xi^2 - 5*L^2*xi + 18*Pi"
        assert locus_coordinates(g2.side) == (18, -5, 1)

    def test_gram_5x5_class_sign_normalized(self, d4):
        # declared representative is the negative of the positivity-normalized one
        assert locus_coordinates(d4.side) == (30, -14, -14, 6, -1)
        assert d4.declared_locus_signs == (-1, -1)

    def test_orthogonality_rows(self, g2, d4):
        for cfg in (g2, d4):
            lat = middle_lattice(cfg.side)
            v = locus_coordinates(cfg.side)
            for i, (_, e) in enumerate(lat.monomials):
                if e <= cfg.rank - 2:
                    assert sum(lat.gram[i][j] * v[j] for j in range(len(v))) == 0

    def test_normalization_pairing_is_degree(self, g2, d4):
        for cfg in (g2, d4):
            cls = locus_pushforward_class(cfg.side)
            norm = reduce(cfg.side, {cfg.rank - 1: cfg.side.base.hyperplane})
            assert pairing_on_M(cfg.side, cls, norm) == 12

    def test_unexpected_rank(self, g2):
        short = RoofSide("short", g2.side.base, 3, g2.side.groth_coeffs,
                         (("Pi", 0), ("L^2", 1)))
        with pytest.raises(UnexpectedRankError):
            locus_pushforward_class(short)


class TestSignLawAndDegrees:
    def test_self_pairings(self, g2, d4):
        assert polarized_sign_check(g2) == 12
        assert polarized_sign_check(d4) == -12
        assert polarized_sign_check(g2, "tilde") == 12
        assert polarized_sign_check(d4, "tilde") == -12

    def test_sign_matches_rank_parity(self, g2, d4, toy):
        for cfg in (g2, d4, toy):
            expected = (-1) ** (cfg.rank - 1) * cfg.polarization_degree
            assert polarized_sign_check(cfg) == expected

    def test_cy_degree(self, g2, d4):
        assert cy_degree(g2.side) == 12
        assert cy_degree(d4.side) == 12

    def test_cy_degree_hypersurface(self):
        q5 = make_quadric_ring(5)
        side = build_side_from_chern(q5, ChernVector(1, (q5.l_power(1) * 2,)))
        assert cy_degree(side) == 4


class TestSwitchSide:
    def test_locus_switch_3x3(self, g2):
        lat_t = middle_lattice(g2.tilde_side)
        j = switch_side(g2, locus_pushforward_class(g2.side))
        assert str(j) == "7*L*xi^2 - 23*L^2*xi + 42*Pi"
        assert coordinates_in_lattice(lat_t, j) == (42, -23, 7)

    def test_xi_is_fixed(self, g2):
        switched = switch_side(g2, xi_power(g2.side, 1))
        assert switched == xi_power(g2.tilde_side, 1)

    def test_plane_class_switch(self, g2):
        lat = middle_lattice(g2.side)
        lat_t = middle_lattice(g2.tilde_side)
        img = switch_side(g2, class_from_coordinates(lat, (1, 0, 0)))
        assert coordinates_in_lattice(lat_t, img) == (5, -3, 1)

    def test_declared_representative_5x5(self, d4):
        lat = middle_lattice(d4.side)
        lat_t = middle_lattice(d4.tilde_side)
        declared = class_from_coordinates(lat, (-30, 14, 14, -6, 1))
        img = switch_side(d4, declared)
        assert coordinates_in_lattice(lat_t, img) == (42, -38, -50, 30, -7)
        assert str(img) == "-7*L*xi^3 + 30*L^2*xi^2 - 38*Pi1*xi - 50*Pi2*xi + 42*Pi1*L"

    def test_involution_on_all_middle_monomials(self, g2, d4, toy):
        for cfg in (g2, d4):
            for side in (cfg.side, cfg.tilde_side):
                for cls in middle_lattice(side).classes:
                    assert switch_side(cfg, switch_side(cfg, cls)) == cls
        # the symmetric toy only switches the hyperplane-polynomial subspace
        cls = locus_pushforward_class(toy.side)
        assert switch_side(toy, switch_side(toy, cls)) == cls

    def test_unbalanced_spinor_monomial_round_trip(self, d4):
        cls = monomial(d4.side, "Pi1", 1)
        img = switch_side(d4, cls)
        assert not img.is_zero
        assert switch_side(d4, img) == cls

    def test_unswitchable_class_rejected(self, toy):
        with pytest.raises(roofcalc.SwitchError):
            switch_side(toy, monomial(toy.side, "Pi1", 0))

    def test_non_integral_result_rejected(self, g2):
        half_pi = monomial(g2.side, "Pi", 0).scale(Fraction(1, 2))
        with pytest.raises(IntegralityError):
            switch_side(g2, half_pi)

    def test_inconsistent_sides_detected(self, g2):
        q5a, q5b = make_quadric_ring(5), make_quadric_ring(5)
        chern = ChernVector(3, (q5a.l_power(1) * 5, q5a.l_power(2) * 9, q5a.basis_class("Pi") * 12))
        side = build_side_from_chern(
            q5a, chern, name="a", middle_basis=(("Pi", 0), ("L^2", 1), ("L", 2)))
        other = RoofSide("b", q5b, 3,
                         (q5b.l_power(1) * 4, q5b.l_power(2) * 9, q5b.basis_class("Pi") * 12),
                         (("Pi", 0), ("L^2", 1), ("L", 2)))
        cfg = RoofConfig("mismatch", side, other, 12)
        with pytest.raises(InvalidRoofError):
            switch_side(cfg, locus_pushforward_class(side))


class TestResidueScan:
    def test_gram_3x3(self, g2):
        scan = residue_scan(g2)
        assert scan.residue_set == (7,)
        assert scan.sign_orbit == (5, 7)
        assert scan.iso_obstructed
        assert dict(scan.witnesses)[7] == (-7, 1, 0)
        assert scan.declared_witness == (7, (-7, 1, 0))

    def test_gram_5x5(self, d4):
        scan = residue_scan(d4)
        assert scan.residue_set == (5,)
        assert scan.sign_orbit == (5, 7)
        assert scan.iso_obstructed
        assert scan.declared_witness == (-7, (-14, 5, 4, -1, 0))

    def test_unit_residue_certified_absent(self, g2, d4):
        for cfg in (g2, d4):
            scan = residue_scan(cfg)
            assert 1 not in scan.sign_orbit and 11 not in scan.sign_orbit

    def test_witnesses_integral_and_primitive(self, g2, d4):
        import math

        for cfg in (g2, d4):
            for _, w in residue_scan(cfg).witnesses:
                assert math.gcd(*w) == 1

    def test_symmetric_toy_not_obstructed(self, toy):
        scan = residue_scan(toy)
        assert scan.degree == 2
        assert scan.residue_set == (1,)
        assert not scan.iso_obstructed


class TestRankDecomposition:
    def test_middle_rank3(self, g2):
        assert cayley_rank_decomposition(g2, 6) == [1, 1, 22]
        assert sum(cayley_rank_decomposition(g2, 6)) == 24

    def test_middle_rank4(self, d4):
        assert cayley_rank_decomposition(d4, 8) == [1, 2, 1, 22]
        assert sum(cayley_rank_decomposition(d4, 8)) == 26

    def test_degree_zero(self, g2, d4):
        assert cayley_rank_decomposition(g2, 0) == [1, 0, 0]
        assert cayley_rank_decomposition(d4, 0) == [1, 0, 0, 0]

    def test_out_of_range(self, g2):
        with pytest.raises(DegreeMismatchError):
            cayley_rank_decomposition(g2, 13)
        with pytest.raises(DegreeMismatchError):
            cayley_rank_decomposition(g2, -1)

    def test_odd_degrees_vanish(self, g2):
        assert cayley_rank_decomposition(g2, 5) == [0, 0, 0]

    def test_euler_characteristic_of_section(self, g2, d4):
        # piecewise-fibration oracle: chi(M) = (r-1) * chi(B) + chi(K3)
        for cfg, chi_base in ((g2, 6), (d4, 8)):
            total = sum(
                (-1) ** k * sum(cayley_rank_decomposition(cfg, k))
                for k in range(0, 2 * (cfg.n + cfg.rank - 2) + 1)
            )
            assert total == (cfg.rank - 1) * chi_base + 24


class TestConfigInvariants:
    def test_rank_mismatch_rejected(self, g2, toy):
        with pytest.raises(InvalidRoofError):
            RoofConfig("bad", g2.side, toy.side, 12)

    def test_polarization_degree_checked(self, g2):
        with pytest.raises(InvalidRoofError):
            RoofConfig("bad", g2.side, g2.tilde_side, 11)

    def test_swap_roundtrip(self, g2):
        assert g2.swap().swap().side is g2.side
