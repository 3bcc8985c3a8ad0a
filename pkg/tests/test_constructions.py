# tests/test_constructions.py
"""Tests for the six named constructions of degree-6 aG schemes."""
import random

import pytest

from algebra.errors import ConstructionError, InvalidInputError, ShapeError
from algebra.fields import FieldSpec
from algebra.ideals import Ideal, graded_component_dim, groebner_equal, ideal_sum
from algebra.rings import PolyRing
from analysis import geometry
from analysis.labels import AlgebraLabel
from catalog import constructions, random_data
from catalog.models import gfat, local_models, projective_ring, reducible_models


@pytest.fixture
def plane(fp):
    return projective_ring(fp, 2)


@pytest.fixture
def p3(fp):
    return projective_ring(fp, 3)


# ── determinantal constructions ──────────────────────────────


class TestDeterminantal:
    def test_minor_and_face_counts(self, p4):
        rng = random.Random(0)
        assert len(constructions.minors_2x2(random_data.linear_matrix(p4, 3, 3, rng))) == 9
        assert len(constructions.cube_faces(random_data.linear_cube(p4, rng))) == 12

    def test_scandinavian_gives_gfat(self, p4):
        result = constructions.scandinavian(constructions.scandinavian_g6_matrix(p4), p4)
        assert result.zero_dimensional
        assert groebner_equal(result.ideal, gfat(6, ring=p4))

    def test_anglo_american_gives_gfat(self, p4):
        result = constructions.anglo_american(constructions.anglo_american_g6_cube(p4), p4)
        assert groebner_equal(result.ideal, gfat(6, ring=p4))

    def test_needs_square_root_of_minus_one(self):
        ring = projective_ring(FieldSpec.prime(7), 4)
        with pytest.raises(InvalidInputError, match="square root of -1"):
            constructions.scandinavian_g6_matrix(ring)

    def test_random_scandinavian(self, p4):
        result = constructions.scandinavian(random_data.linear_matrix(p4, 3, 3, random.Random(1)), p4)
        assert result.zero_dimensional
        assert geometry.degree(result.ideal) == 6
        assert geometry.is_aG(result.ideal)
        assert graded_component_dim(result.ideal, 2) == 9

    def test_shape_and_linearity(self, p4):
        x = p4.gens
        with pytest.raises(ShapeError):
            constructions.scandinavian([[x[0], x[1]], [x[2], x[3]]], p4)
        square = [[x[0] ** 2, x[1], x[2]], [x[1], x[2], x[3]], [x[2], x[3], x[4]]]
        with pytest.raises(InvalidInputError, match="not a linear form"):
            constructions.scandinavian(square, p4)
        with pytest.raises(ShapeError):
            constructions.anglo_american([[x[0], x[1]], [x[2], x[3]]], p4)

    def test_degenerate_matrix_is_flagged(self, p4):
        x = p4.gens
        # rank-one matrix: all minors vanish
        M = [[x[0], x[1], x[2]], [x[0], x[1], x[2]], [x[0], x[1], x[2]]]
        assert not constructions.scandinavian(M, p4).zero_dimensional


# ── pfaffians ────────────────────────────────────────────────


class TestBritish:
    def test_extrasymmetric_is_antisymmetric(self, p4):
        rng = random.Random(2)
        A = random_data.antisymmetric_matrix(p4, 3, rng)
        S = random_data.symmetric_matrix(p4, 3, rng)
        N = constructions.extrasymmetric(A, S, 1, p4)
        assert all(N[i][j] == -N[j][i] for i in range(6) for j in range(6))

    def test_pfaffians_span_nine_quadrics(self, p4):
        rng = random.Random(0)
        A = random_data.antisymmetric_matrix(p4, 3, rng)
        S = random_data.symmetric_matrix(p4, 3, rng)
        result = constructions.british(A, S, 1, p4)
        assert graded_component_dim(result.ideal, 2) == 9

    def test_rejects_non_symmetric(self, p4):
        rng = random.Random(0)
        A = random_data.antisymmetric_matrix(p4, 3, rng)
        S = random_data.linear_matrix(p4, 3, 3, rng)
        with pytest.raises(InvalidInputError, match="not symmetric"):
            constructions.british(A, S, 1, p4)

    def test_rejects_non_antisymmetric(self, p4):
        rng = random.Random(0)
        A = random_data.symmetric_matrix(p4, 3, rng)
        S = random_data.symmetric_matrix(p4, 3, rng)
        with pytest.raises(InvalidInputError):
            constructions.british(A, S, 1, p4)


# ── japanese ─────────────────────────────────────────────────


class TestJapanese:
    def test_two_points_and_fat_point(self, plane):
        C, F = constructions.JAPANESE_DATA["A2,4 + A0,1^2"]
        X = constructions.japanese(plane.parse(C), plane.parse(F), plane)
        assert X.ring.variables == ("x0", "x1", "x2", "x3", "x4")
        assert geometry.degree(X) == 6
        assert str(geometry.classify_scheme(X)) == "A2,4 + A0,1^2"

    def test_common_component(self, plane):
        with pytest.raises(ConstructionError):
            constructions.japanese(plane.parse("x1*x2"), plane.parse("x0^2*x1"), plane)

    def test_degrees_checked(self, plane):
        with pytest.raises(InvalidInputError):
            constructions.japanese(plane.parse("x1"), plane.parse("x0^3"), plane)


# ── italian ──────────────────────────────────────────────────


class TestItalian:
    def test_gfat_from_g5(self, p3, p4):
        gens, f_text = constructions.ITALIAN_DATA["A4,6"]
        I5 = Ideal.parse(p3, gens)
        f = constructions.italian_quadric(I5)
        assert groebner_equal(ideal_sum(I5, Ideal(p3, [f])), ideal_sum(I5, Ideal.parse(p3, [f_text])))
        X = constructions.italian(I5, -p4.var("x4"), p4)
        assert str(geometry.classify_scheme(X)) == "A4,6"

    def test_g_must_involve_last_variable(self, p3, p4):
        I5 = Ideal.parse(p3, constructions.ITALIAN_DATA["A4,6"][0])
        with pytest.raises(InvalidInputError):
            constructions.italian(I5, p4.var("x1"), p4)

    def test_point_must_lie_on_scheme(self, p3, p4):
        I5 = Ideal.parse(p3, ["x0^2", "x1", "x2", "x3"])
        with pytest.raises(InvalidInputError, match="not on the degree-5 scheme"):
            constructions.italian(I5, -p4.var("x4"), p4)


# ── anglo-hellenic ───────────────────────────────────────────


class TestAngloHellenic:
    def test_reproduces_local_model(self, p4):
        rows, s_text = constructions.ANGLO_HELLENIC_DATA["A3,6"]
        A = [[p4.parse(e) for e in row] for row in rows]
        I = constructions.anglo_hellenic(A, p4.parse(s_text), p4)
        assert groebner_equal(I, local_models(p4.field)[AlgebraLabel.parse("A3,6")])

    def test_reference_entries_match_models(self, p4):
        targets = {**reducible_models(p4.field), **local_models(p4.field)}
        for name in constructions.ANGLO_HELLENIC_DATA:
            I = constructions.anglo_hellenic_reference(name, p4)
            assert groebner_equal(I, targets[AlgebraLabel.parse(name)]), name

    def test_sign_flip_only_where_needed(self, p4):
        assert constructions.ANGLO_HELLENIC_FLIP_X4 == {"A3,5 + A0,1"}
        rows, s_text = constructions.ANGLO_HELLENIC_DATA["A3,5 + A0,1"]
        A = [[p4.parse(e) for e in row] for row in rows]
        unflipped = constructions.anglo_hellenic(A, p4.parse(s_text), p4)
        target = reducible_models(p4.field)[AlgebraLabel.parse("A3,5 + A0,1")]
        assert not groebner_equal(unflipped, target)

    def test_tom_format_agrees_with_minors(self, p4):
        M = random_data.tom_ready_matrix(p4, random.Random(0))
        A, s = constructions.tom_format(M, p4)
        unprojected = constructions.anglo_hellenic(A, s, p4)
        assert groebner_equal(unprojected, constructions.scandinavian(M, p4).ideal)

    def test_reserved_variable(self, fp):
        ring = PolyRing(fp, ("x0", "x1", "x2", "x3", "s"))
        z = ring.zero
        with pytest.raises(InvalidInputError, match="reserved"):
            constructions.anglo_hellenic([[z] * 5 for _ in range(5)], ring.var("x0"), ring)

    def test_leading_entry_must_be_nonzero(self, p4):
        z = p4.zero
        with pytest.raises(InvalidInputError, match="a01"):
            constructions.unprojection_data([[z] * 5 for _ in range(5)], p4)
