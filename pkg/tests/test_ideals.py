# tests/test_ideals.py
"""Tests for ideal arithmetic, elimination, colons, graded pieces and quotient algebras."""
import random

import pytest

from algebra.errors import InvalidInputError, NotHomogeneousError, RingMismatchError, SaturationLimitError
from algebra.ideals import (
    Ideal,
    change_coordinates,
    colon,
    coordinate_ideal,
    dehomogenize_ideal,
    eliminate,
    graded_component_dim,
    groebner_equal,
    ideal_power,
    ideal_sum,
    intersect,
    is_member,
    point_ideal,
    quotient_by_element,
    ring_map_kernel,
    saturate,
    translate,
)
from algebra.quotient import QuotientAlgebra
from algebra.rings import PolyRing
from catalog.random_data import random_polynomial


def ideal(ring, *texts):
    return Ideal.parse(ring, texts)


# ── arithmetic ───────────────────────────────────────────────


class TestIdealArithmetic:
    def test_equality_is_by_basis(self, plane_qq):
        assert ideal(plane_qq, "x", "y") == ideal(plane_qq, "x + y", "x - y")
        assert ideal(plane_qq, "x") != ideal(plane_qq, "y")

    def test_sum_product_power(self, plane_qq):
        m = coordinate_ideal(plane_qq, ["x", "y"])
        assert (m * m) == ideal(plane_qq, "x^2", "x*y", "y^2")
        assert m**2 == m * m
        assert ideal(plane_qq, "x") + ideal(plane_qq, "y") == m

    def test_power_zero_is_unit(self, plane_qq):
        assert ideal_power(ideal(plane_qq, "x"), 0).is_unit

    def test_negative_power(self, plane_qq):
        with pytest.raises(InvalidInputError):
            ideal_power(ideal(plane_qq, "x"), -1)

    def test_ring_mismatch(self, plane_qq, qq):
        other = PolyRing(qq, ("x", "y", "z"))
        with pytest.raises(RingMismatchError):
            ideal(plane_qq, "x") + ideal(other, "x")

    def test_membership(self, plane_qq):
        I = ideal(plane_qq, "x^2 - y", "x*y - 1")
        assert is_member(plane_qq.parse("y^3 - 1"), I)
        assert not is_member(plane_qq.parse("x - 1"), I)

    def test_zero_generators_dropped(self, plane_qq):
        I = Ideal(plane_qq, [plane_qq.zero, plane_qq.var("x")])
        assert len(I.gens) == 1
        assert Ideal(plane_qq, []).is_zero

    def test_format(self, plane_qq):
        assert ideal(plane_qq, "y + x^2").format() == ["x^2 + y"]


# ── elimination and colons ───────────────────────────────────


class TestElimination:
    def test_cuspidal_cubic(self, qq):
        ring = PolyRing(qq, ("t", "x", "y"))
        image = eliminate(ideal(ring, "t^2 - x", "t^3 - y"), 1)
        plane = PolyRing(qq, ("x", "y"))
        assert groebner_equal(image, ideal(plane, "x^3 - y^2"))

    def test_eliminate_range(self, plane_qq):
        with pytest.raises(InvalidInputError):
            eliminate(ideal(plane_qq, "x"), 2)

    def test_intersect_coordinate_axes(self, plane_qq):
        assert intersect(ideal(plane_qq, "x"), ideal(plane_qq, "y")) == ideal(plane_qq, "x*y")

    def test_intersect_points(self, plane_qq):
        two = intersect(point_ideal(plane_qq, [0, 0]), point_ideal(plane_qq, [1, 2]))
        assert two.quotient_dimension == 2

    def test_colon_by_element(self, plane_qq):
        I = ideal(plane_qq, "x^2*y")
        assert quotient_by_element(I, plane_qq.var("x")) == ideal(plane_qq, "x*y")
        assert quotient_by_element(I, plane_qq.parse("x^2*y")).is_unit

    def test_colon_by_ideal(self, plane_qq):
        I = ideal(plane_qq, "x^2", "x*y")
        assert colon(I, coordinate_ideal(plane_qq, ["x", "y"])) == ideal(plane_qq, "x")

    def test_colon_by_zero(self, plane_qq):
        with pytest.raises(InvalidInputError):
            colon(ideal(plane_qq, "x"), Ideal(plane_qq, []))

    def test_saturate_removes_embedded_point(self, plane_qq):
        I = ideal(plane_qq, "x^2", "x*y")
        assert saturate(I, coordinate_ideal(plane_qq, ["x", "y"])) == ideal(plane_qq, "x")

    def test_saturate_cap(self, plane_qq):
        I = ideal(plane_qq, "x^2", "x*y")
        with pytest.raises(SaturationLimitError):
            saturate(I, coordinate_ideal(plane_qq, ["x", "y"]), max_iterations=1)


# ── graded pieces and ring maps ──────────────────────────────


class TestGraded:
    def test_twisted_cubic_quadrics(self, qq):
        ring = PolyRing(qq, ("a", "b", "c", "d"))
        I = ideal(ring, "a*c - b^2", "b*d - c^2", "a*d - b*c")
        assert graded_component_dim(I, 1) == 0
        assert graded_component_dim(I, 2) == 3
        # 20 cubics minus the 10 of the twisted cubic's coordinate ring
        assert graded_component_dim(I, 3) == 10

    def test_not_homogeneous(self, plane_qq):
        with pytest.raises(NotHomogeneousError):
            graded_component_dim(ideal(plane_qq, "x^2 - y"), 2)

    def test_veronese_conic(self, plane_qq):
        s_t = PolyRing(plane_qq.field, ("s", "t"))
        images = {"y0": s_t.parse("s^2"), "y1": s_t.parse("s*t"), "y2": s_t.parse("t^2")}
        kernel = ring_map_kernel(s_t, [], images)
        target = PolyRing(plane_qq.field, ("y0", "y1", "y2"))
        assert groebner_equal(kernel, ideal(target, "y0*y2 - y1^2"))

    def test_kernel_name_clash(self, plane_qq):
        with pytest.raises(InvalidInputError):
            ring_map_kernel(plane_qq, [], {"x": plane_qq.var("y")})


# ── coordinates and points ───────────────────────────────────


class TestCoordinates:
    def test_translate_moves_point_to_origin(self, plane_qq):
        moved = translate(point_ideal(plane_qq, [1, 2]), [1, 2])
        assert moved == coordinate_ideal(plane_qq, ["x", "y"])

    def test_translate_length(self, plane_qq):
        with pytest.raises(InvalidInputError):
            translate(ideal(plane_qq, "x"), [1])

    def test_change_coordinates(self, plane_qq):
        assert change_coordinates(ideal(plane_qq, "x"), [[0, 1], [1, 0]]) == ideal(plane_qq, "y")

    def test_dehomogenize(self, qq):
        ring = PolyRing(qq, ("x0", "x1", "x2"))
        chart = dehomogenize_ideal(ideal(ring, "x1 - x0", "x2"), "x0")
        assert chart == ideal(PolyRing(qq, ("x1", "x2")), "x1 - 1", "x2")


# ── quotient algebras ────────────────────────────────────────


class TestQuotientAlgebra:
    def test_basis_and_products(self, plane_qq):
        A = QuotientAlgebra(ideal(plane_qq, "x^2", "y^2"))
        assert A.dimension == 4
        assert A.basis[0] == (0, 0)
        x = A.coordinates(plane_qq.var("x"))
        y = A.coordinates(plane_qq.var("y"))
        assert A.product(x, y) == A.coordinates(plane_qq.parse("x*y"))
        assert A.product(x, x) == A.zero_vector()

    def test_multiplication_matrix_shape(self, plane_qq):
        A = QuotientAlgebra(ideal(plane_qq, "x^2", "y^2"))
        M = A.multiplication_matrix(plane_qq.var("x"))
        assert len(M) == 4 and all(len(row) == 4 for row in M)

    def test_multiply_rows(self, plane_qq):
        A = QuotientAlgebra(ideal(plane_qq, "x^2", "y^2"))
        one = A.unit_vector(0)
        assert A.multiply_rows([one], plane_qq.index("y")) == [A.coordinates(plane_qq.var("y"))]

    def test_element_round_trip(self, plane_qq):
        A = QuotientAlgebra(ideal(plane_qq, "x^2", "y^2"))
        f = plane_qq.parse("3*x*y - x + 2")
        assert A.element(A.coordinates(f)) == f

    def test_support_at_origin(self, plane_qq):
        assert QuotientAlgebra(ideal(plane_qq, "x^2", "y^2")).contains_origin_only()
        assert not QuotientAlgebra(ideal(plane_qq, "x^2 - 1", "y")).contains_origin_only()


# ── cached bases ─────────────────────────────────────────────


class TestFromBasis:
    def test_reuses_the_basis(self, plane_qq):
        I = ideal(plane_qq, "x^2 - y", "x*y")
        J = Ideal.from_basis(I.groebner)
        assert J.groebner is I.groebner
        assert groebner_equal(J, Ideal(plane_qq, J.gens))

    def test_elimination_basis_spans_its_generators(self, qq):
        ring = PolyRing(qq, ("t", "x", "y"))
        image = eliminate(ideal(ring, "t^2 - x", "t^3 - y", "t*x - y"), 1)
        assert groebner_equal(image, Ideal(image.ring, image.gens))


# ── seeded ideal properties ──────────────────────────────────


@pytest.fixture
def plane_fp(fp):
    return PolyRing(fp, ("x", "y"))


def random_ideal(ring, rng, count=2):
    """Generators without constant terms, so the origin lies on V(I)."""
    return Ideal(ring, [random_polynomial(ring, rng, degree=3, terms=3, constant=False) for _ in range(count)])


class TestIdealProperties:
    @pytest.mark.parametrize("seed", range(5))
    def test_saturate_is_idempotent(self, plane_fp, seed):
        rng = random.Random(seed)
        I = random_ideal(plane_fp, rng)
        for J in (coordinate_ideal(plane_fp, ["x", "y"]), random_ideal(plane_fp, rng)):
            once = saturate(I, J)
            assert groebner_equal(saturate(once, J), once)
            assert once.contains_ideal(I)

    @pytest.mark.parametrize("seed", range(5))
    def test_colon_contains_ideal(self, plane_fp, seed):
        rng = random.Random(seed)
        I, J = random_ideal(plane_fp, rng), random_ideal(plane_fp, rng)
        assert colon(I, J).contains_ideal(I)

    @pytest.mark.parametrize("seed", range(5))
    def test_intersection_and_sum_bracket_ideal(self, plane_fp, seed):
        rng = random.Random(seed)
        I, J = random_ideal(plane_fp, rng), random_ideal(plane_fp, rng)
        meet = intersect(I, J)
        assert I.contains_ideal(meet)
        assert J.contains_ideal(meet)
        assert ideal_sum(I, J).contains_ideal(I)
