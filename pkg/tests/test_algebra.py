# tests/test_algebra.py
"""Tests for fields, monomial orders, rings, the polynomial grammar and exact linear algebra."""
import random
from fractions import Fraction

import pytest

from algebra.errors import (
    InvalidInputError,
    PolynomialSyntaxError,
    RingMismatchError,
    ShapeError,
    SingularMatrixError,
    UnknownVariableError,
    UnsupportedCharacteristicError,
)
from algebra.fields import DEFAULT_PRIME, FieldSpec
from algebra.linalg import inverse, nullspace, random_invertible, rank, row_basis, transpose
from algebra.orders import GREVLEX, MonomialOrderSpec, OrderKind
from algebra.parsing import tokenize
from algebra.rings import (
    PolyRing,
    dehomogenize,
    homogenize,
    is_homogeneous,
    linear_change,
    monomials_of_degree,
    poly_arith,
    substitute,
    total_degree,
    transfer,
)
from catalog.random_data import random_polynomial


# ── FieldSpec ────────────────────────────────────────────────


class TestFieldSpec:
    def test_default_prime(self):
        fp = FieldSpec.prime()
        assert fp.characteristic == DEFAULT_PRIME
        assert str(fp) == "Fp(65537)"

    def test_parse_round_trip(self):
        assert FieldSpec.parse("QQ") == FieldSpec.rationals()
        assert FieldSpec.parse("Fp(101)") == FieldSpec.prime(101)
        assert FieldSpec.parse(" Fp( 7 ) ") == FieldSpec.prime(7)

    @pytest.mark.parametrize("p", [2, 3])
    def test_small_characteristic_rejected(self, p):
        with pytest.raises(UnsupportedCharacteristicError, match=f"characteristic {p} unsupported"):
            FieldSpec.prime(p)

    def test_composite_rejected(self):
        with pytest.raises(InvalidInputError, match="not prime"):
            FieldSpec.prime(15)

    def test_unknown_field_text(self):
        with pytest.raises(InvalidInputError):
            FieldSpec.parse("RR")

    def test_sqrt_minus_one_squares_to_minus_one(self, fp):
        i = fp.sqrt_minus_one()
        assert i is not None
        assert i * i == fp.scalar(-1)

    def test_no_sqrt_minus_one(self, qq):
        assert qq.sqrt_minus_one() is None
        assert FieldSpec.prime(7).sqrt_minus_one() is None

    def test_scalar_conversions(self, qq, fp):
        assert qq.to_python(qq.scalar("3/4")) == Fraction(3, 4)
        assert qq.to_python(qq.scalar(Fraction(-1, 2))) == Fraction(-1, 2)
        half = fp.scalar("1/2")
        assert half * fp.scalar(2) == fp.scalar(1)

    def test_symmetric_representative(self, fp):
        assert fp.format(fp.scalar(-5)) == "-5"

    def test_random_scalar_nonzero(self, fp):
        rng = random.Random(0)
        assert all(fp.random_scalar(rng, nonzero=True) for _ in range(50))


# ── monomial orders ──────────────────────────────────────────


class TestOrders:
    def test_parse(self):
        assert MonomialOrderSpec.parse("grevlex") == GREVLEX
        assert MonomialOrderSpec.parse("lex").kind is OrderKind.lex
        assert MonomialOrderSpec.parse("elim(2)") == MonomialOrderSpec.elimination(2)
        assert str(MonomialOrderSpec.elimination(2)) == "elim(2)"

    def test_invalid(self):
        with pytest.raises(InvalidInputError):
            MonomialOrderSpec.parse("revlex")
        with pytest.raises(InvalidInputError):
            MonomialOrderSpec.elimination(0)

    def test_elimination_block_dominates(self, qq):
        ring = PolyRing(qq, ("t", "x", "y"), MonomialOrderSpec.elimination(1))
        f = ring.parse("x^5 + t")
        assert f.LM == (1, 0, 0)

    def test_elim_needs_enough_variables(self, qq):
        with pytest.raises(InvalidInputError):
            PolyRing(qq, ("x", "y"), MonomialOrderSpec.elimination(2))


# ── PolyRing ─────────────────────────────────────────────────


class TestPolyRing:
    def test_gens_and_index(self, plane_qq):
        assert plane_qq.nvars == 2
        assert plane_qq.index("y") == 1
        with pytest.raises(UnknownVariableError):
            plane_qq.index("z")

    def test_duplicate_variables(self, qq):
        with pytest.raises(InvalidInputError, match="duplicate"):
            PolyRing(qq, ("x", "x"))

    def test_format_canonical(self, plane_qq):
        f = plane_qq.parse("-1/2*y + x^2")
        assert plane_qq.format(f) == "x^2 - 1/2*y"
        assert plane_qq.format(plane_qq.zero) == "0"

    def test_format_parse_fixpoint(self, p4):
        f = p4.parse("3*x0^2*x1 - x4^3 + 7 x2 x3 x4")
        text = p4.format(f)
        assert p4.format(p4.parse(text)) == text

    def test_check_rejects_foreign_polynomial(self, plane_qq, qq):
        other = PolyRing(qq, ("x", "y", "z"))
        with pytest.raises(RingMismatchError):
            plane_qq.check(other.var("x"))
        with pytest.raises(RingMismatchError):
            poly_arith(plane_qq.var("x"), other.var("x"), "add")

    def test_monomial_shape(self, plane_qq):
        with pytest.raises(ShapeError):
            plane_qq.monomial((1, 2, 3))

    def test_degrees(self, plane_qq):
        assert total_degree(plane_qq.parse("x^2*y + y")) == 3
        assert total_degree(plane_qq.zero) == -1
        assert is_homogeneous(plane_qq.parse("x^2 + x*y"))
        assert not is_homogeneous(plane_qq.parse("x^2 + y"))

    def test_monomials_of_degree_count(self):
        # binomial(5 + 2 - 1, 2)
        assert len(list(monomials_of_degree(5, 2))) == 15


# ── ring maps ────────────────────────────────────────────────


class TestRingMaps:
    def test_transfer_into_larger_ring(self, plane_qq, qq):
        big = PolyRing(qq, ("z", "y", "x"))
        f = plane_qq.parse("x^2 + 2*y")
        assert big.format(transfer(f, plane_qq, big)) == "x^2 + 2*y"

    def test_transfer_missing_variable(self, plane_qq, qq):
        small = PolyRing(qq, ("x",))
        with pytest.raises(UnknownVariableError):
            transfer(plane_qq.parse("x + y"), plane_qq, small)

    def test_substitute(self, plane_qq):
        f = plane_qq.parse("x^2 - y")
        g = substitute(f, plane_qq, {"x": plane_qq.parse("x + 1")})
        assert g == plane_qq.parse("x^2 + 2*x + 1 - y")

    def test_linear_change_swaps_variables(self, plane_qq):
        swapped = linear_change([plane_qq.parse("x^2 + y")], plane_qq, [[0, 1], [1, 0]])
        assert swapped == [plane_qq.parse("y^2 + x")]

    def test_linear_change_singular(self, plane_qq):
        with pytest.raises(SingularMatrixError):
            linear_change([plane_qq.var("x")], plane_qq, [[1, 1], [1, 1]])

    def test_dehomogenize_then_homogenize(self, qq):
        ring = PolyRing(qq, ("x0", "x1", "x2"))
        f = ring.parse("x1^2 - x0*x2 + x0^2")
        chart = ring.without("x0")
        affine = dehomogenize(f, ring, "x0")
        assert affine == chart.parse("x1^2 - x2 + 1")
        back = homogenize(transfer(affine, chart, ring), ring, "x0")
        assert back == f


# ── polynomial grammar ───────────────────────────────────────


class TestParsing:
    def test_implicit_product(self, plane_qq):
        assert plane_qq.parse("2 x y^2") == plane_qq.parse("2*x*y^2")

    def test_unexpected_character_position(self, plane_qq):
        with pytest.raises(PolynomialSyntaxError) as err:
            plane_qq.parse("x + $y")
        assert (err.value.line, err.value.column) == (1, 5)
        assert "unexpected character" in err.value.reason

    def test_dangling_operator(self, plane_qq):
        with pytest.raises(PolynomialSyntaxError, match="expected a term"):
            plane_qq.parse("x +")

    def test_division_by_zero(self, plane_qq):
        with pytest.raises(PolynomialSyntaxError, match="division by zero"):
            plane_qq.parse("1/0*x")

    def test_missing_exponent(self, plane_qq):
        with pytest.raises(PolynomialSyntaxError, match="an exponent"):
            plane_qq.parse("x^y")

    def test_undeclared_variable(self, plane_qq):
        with pytest.raises(UnknownVariableError, match="'z'"):
            plane_qq.parse("x + z")

    def test_tokens_track_lines(self):
        tokens = list(tokenize("x\n  + y"))
        plus = [t for t in tokens if t.kind == "plus"][0]
        assert (plus.line, plus.column) == (2, 3)
        assert tokens[-1].kind == "eof"


# ── linear algebra ───────────────────────────────────────────


class TestLinalg:
    def test_rank_and_nullspace(self, qq):
        K = qq.domain
        rows = [[K(1), K(2), K(3)], [K(2), K(4), K(6)]]
        assert rank(rows, 3, K) == 1
        kernel = nullspace(rows, 3, K)
        assert len(kernel) == 2
        for v in kernel:
            assert sum(a * b for a, b in zip(rows[0], v)) == K.zero

    def test_row_basis_is_reduced(self, qq):
        K = qq.domain
        basis = row_basis([[K(2), K(4)], [K(1), K(2)]], 2, K)
        assert basis == [[K(1), K(2)]]

    def test_empty_rows(self, qq):
        K = qq.domain
        assert rank([], 3, K) == 0
        assert len(nullspace([], 3, K)) == 3

    def test_transpose(self):
        assert transpose([[1, 2, 3], [4, 5, 6]]) == [[1, 4], [2, 5], [3, 6]]

    def test_random_invertible_is_seeded(self, fp):
        a = random_invertible(fp, 4, random.Random(7))
        b = random_invertible(fp, 4, random.Random(7))
        assert a == b
        assert rank(a, 4, fp.domain) == 4

    def test_inverse(self, fp):
        M = random_invertible(fp, 3, random.Random(3))
        N = inverse(M, fp.domain)
        K = fp.domain
        product = [[sum((M[i][k] * N[k][j] for k in range(3)), K.zero) for j in range(3)] for i in range(3)]
        assert product == [[K.one if i == j else K.zero for j in range(3)] for i in range(3)]

    def test_inverse_singular(self, qq):
        K = qq.domain
        with pytest.raises(SingularMatrixError):
            inverse([[K(1), K(2)], [K(2), K(4)]], K)


# ── seeded ring properties ───────────────────────────────────

SEEDS = range(5)


@pytest.fixture
def space(fp):
    return PolyRing(fp, ("x", "y", "z"))


def sample(ring, seed, count=3):
    rng = random.Random(seed)
    return [random_polynomial(ring, rng, degree=3, terms=5) for _ in range(count)]


class TestRingProperties:
    @pytest.mark.parametrize("seed", SEEDS)
    def test_ring_axioms(self, space, seed):
        f, g, h = sample(space, seed)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + space.zero == f
        assert f * space.one == f
        assert f - f == space.zero

    @pytest.mark.parametrize("order", ["grevlex", "lex", "grlex", "elim(1)", "elim(2)"])
    @pytest.mark.parametrize("seed", SEEDS)
    def test_order_compatible_with_multiplication(self, fp, order, seed):
        ring = PolyRing(fp, ("x", "y", "z"), MonomialOrderSpec.parse(order))
        key = ring.sympy.order
        rng = random.Random(seed)
        for _ in range(20):
            u, v, w = (tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(3))
            if key(u) < key(v):
                uw = tuple(a + b for a, b in zip(u, w))
                vw = tuple(a + b for a, b in zip(v, w))
                assert key(uw) < key(vw)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_substitute_is_a_homomorphism(self, space, seed):
        f, g, a, b = sample(space, seed, count=4)
        assignment = {"x": a, "z": b}

        def image(p):
            return substitute(p, space, assignment)

        assert image(f * g) == image(f) * image(g)
        assert image(f + g) == image(f) + image(g)
        assert image(space.one) == space.one

    @pytest.mark.parametrize("seed", SEEDS)
    def test_linear_change_inverted(self, fp, space, seed):
        f, g, _ = sample(space, seed)
        M = random_invertible(fp, 3, random.Random(seed))
        moved = linear_change([f, g], space, M)
        assert linear_change(moved, space, inverse(M, fp.domain)) == [f, g]
