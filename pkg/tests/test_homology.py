"""Reduced and local homology, cross-checked against the integer oracle."""

import pytest

from cmtkit.core import EMPTY_FACE, Face, from_facets
from cmtkit.fields import GF2, GF3, RATIONALS, FieldSpec
from cmtkit.generators import boundary_simplex, projective_plane_6, simplex
from cmtkit.homology import (
    BettiVector,
    boundary_matrices,
    local_betti,
    reduced_betti,
    reduced_euler_from_faces,
)
from cmtkit.snf import betti_via_snf

TRIANGLE = from_facets([(1, 2), (1, 3), (2, 3)])


class TestBettiVector:
    def test_lookup_defaults_to_zero(self):
        b = BettiVector({0: 2, 1: 0})
        assert b[0] == 2 and b[1] == 0 and b[7] == 0

    def test_equality_ignores_stored_zeros(self):
        assert BettiVector({0: 1, 1: 0}) == BettiVector({0: 1})

    def test_shift(self):
        assert BettiVector({-1: 1}).shifted(3)[2] == 1

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            BettiVector({0: -1})


class TestFieldSpec:
    def test_parse(self):
        assert FieldSpec.parse("gf7") == FieldSpec.gf(7)
        assert FieldSpec.parse("q").is_rationals
        assert FieldSpec.parse("GF2") == GF2

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            FieldSpec.gf(6)
        with pytest.raises(ValueError):
            FieldSpec.parse("gf9")

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            FieldSpec.parse("florps")


class TestReducedBetti:
    def test_triangle_boundary_is_a_circle(self, all_fields):
        for f in all_fields:
            b = reduced_betti(TRIANGLE, f)
            assert b == BettiVector({1: 1})

    def test_full_simplex_is_acyclic(self, all_fields):
        cx = from_facets([(1, 2, 3, 4)])
        for f in all_fields:
            assert reduced_betti(cx, f) == BettiVector({})

    def test_irrelevant_complex(self):
        cx = from_facets([()])
        assert reduced_betti(cx, GF2) == BettiVector({-1: 1})

    def test_point(self):
        assert reduced_betti(simplex(1), GF2) == BettiVector({})

    def test_two_points(self):
        assert reduced_betti(from_facets([(1,), (2,)]), GF2) == BettiVector({0: 1})

    def test_void_rejected(self):
        with pytest.raises(ValueError):
            reduced_betti(from_facets([]), GF2)

    def test_projective_plane_field_dependence(self):
        # expected values frozen from the integer diagonalization oracle
        rp2 = projective_plane_6()
        assert reduced_betti(rp2, GF2) == BettiVector({1: 1, 2: 1})
        assert reduced_betti(rp2, GF3) == BettiVector({})
        assert reduced_betti(rp2, RATIONALS) == BettiVector({})

    def test_engine_matches_snf_oracle_on_projective_plane(self, all_fields):
        rp2 = projective_plane_6()
        for f in all_fields:
            assert reduced_betti(rp2, f) == betti_via_snf(rp2, f)

    def test_sphere_recognition(self, all_fields):
        for n in range(2, 8):
            cx = boundary_simplex(n)
            expected = BettiVector({n - 2: 1})
            for f in all_fields:
                assert reduced_betti(cx, f) == expected


class TestBoundaryMatrices:
    def test_shapes_and_augmentation(self):
        mats = boundary_matrices(TRIANGLE)
        assert [m.matrix.shape for m in mats] == [(1, 3), (3, 3)]
        assert (mats[0].matrix == 1).all()  # augmentation row

    def test_boundary_squared_is_zero(self):
        for cx in (TRIANGLE, boundary_simplex(5), projective_plane_6()):
            mats = boundary_matrices(cx)
            for a, b in zip(mats, mats[1:]):
                assert not (a.matrix @ b.matrix).any()

    def test_rank_over(self):
        mats = boundary_matrices(TRIANGLE)
        assert mats[1].rank_over(GF2) == 2


class TestEulerConsistency:
    @pytest.mark.parametrize("facets", [
        [(1, 2), (1, 3), (2, 3)],
        [(1, 2, 3), (3, 4, 5)],
        [(1, 2, 3, 4)],
        [()],
    ])
    def test_betti_euler_equals_face_euler(self, facets, all_fields):
        cx = from_facets(facets)
        expected = reduced_euler_from_faces(cx)
        for f in all_fields:
            assert reduced_betti(cx, f).reduced_euler() == expected


class TestLocalBetti:
    def test_interior_of_top_simplex(self):
        cx = from_facets([(1, 2, 3)])
        b = local_betti(cx, Face((0, 1, 2)), GF2)
        assert b == BettiVector({2: 1})

    def test_interior_point_of_circle(self):
        b = local_betti(TRIANGLE, Face((0,)), GF2)
        assert b == BettiVector({1: 1})

    def test_wedge_point_of_two_triangles(self):
        cx = from_facets([(1, 2, 3), (3, 4, 5)])
        b = local_betti(cx, Face((2,)), GF2)
        assert b == BettiVector({1: 1})

    def test_empty_face_rejected(self):
        with pytest.raises(ValueError):
            local_betti(TRIANGLE, EMPTY_FACE, GF2)

    def test_non_face_rejected(self):
        with pytest.raises(ValueError):
            local_betti(TRIANGLE, Face((0, 1, 2)), GF2)


class TestConeAcyclicity:
    @pytest.mark.parametrize("facets", [
        [(1, 2), (1, 3), (2, 3)],
        [(1, 2, 3), (3, 4, 5)],
        [(1,), (2,)],
    ])
    def test_join_with_point_kills_homology(self, facets, all_fields):
        cone = from_facets(facets).join(simplex(1))
        for f in all_fields:
            assert reduced_betti(cone, f) == BettiVector({})
