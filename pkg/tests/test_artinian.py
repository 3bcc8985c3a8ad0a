# tests/test_artinian.py
"""Tests for local Artinian algebras: filtration, socle, pairings, support splitting and classification."""
import random

import pytest
from pydantic import ValidationError

from algebra.errors import (
    ClassificationRangeError,
    InvalidInputError,
    IrrationalSupportError,
    NonGorensteinError,
    NotHomogeneousError,
    SupportNotAtOriginError,
)
from algebra.fields import FieldSpec
from algebra.ideals import Ideal, groebner_equal, intersect, translate
from analysis.artinian import (
    ArtinianReport,
    analyze_local,
    classify,
    classify_local,
    filtration_hilbert,
    local_algebra,
    psi_form_ranks,
    socle_dim,
    split_rational_support,
    square_zero_exists,
    support_points,
)
from analysis.labels import Atom, realizable_labels
from catalog.models import affine_ring, build_catalog, local_generators


def ideal(ring, *texts):
    return Ideal.parse(ring, texts)


@pytest.fixture
def plane(fp):
    return affine_ring(fp, 2)


# ── filtration and socle ─────────────────────────────────────


class TestLocalStructure:
    def test_complete_intersection(self, plane):
        report = filtration_hilbert(ideal(plane, "x1^2", "x2^2"))
        assert report.hilbert_fn == [1, 2, 1]
        assert report.dim == 4
        assert report.level == 2

    def test_socle(self, plane):
        assert socle_dim(ideal(plane, "x1^2", "x2^2")) == 1
        assert socle_dim(ideal(plane, "x1^2", "x1*x2", "x2^2")) == 2

    def test_support_elsewhere(self, plane):
        with pytest.raises(SupportNotAtOriginError):
            local_algebra(ideal(plane, "x1 - 1", "x2"))

    def test_psi_forms_gorenstein(self, plane):
        forms = psi_form_ranks(ideal(plane, "x1^2", "x2^2"))
        assert [f.rank for f in forms] == [1, 2, 1]
        assert all(f.nondegenerate for f in forms)

    def test_psi_forms_two_dimensional_top(self, plane):
        forms = psi_form_ranks(ideal(plane, "x1^2", "x1*x2", "x2^2"))
        assert not any(f.nondegenerate for f in forms)

    def test_psi_forms_need_grading(self, plane):
        with pytest.raises(NotHomogeneousError):
            psi_form_ranks(ideal(plane, "x1^2 - x2^3", "x1*x2"))


# ── square-zero test on H = (1, 2, 2, 1) ─────────────────────


class TestSquareZero:
    def test_first_special_algebra(self, plane):
        assert square_zero_exists(Ideal(plane, local_generators(Atom.special_atom(1), plane)))

    def test_second_special_algebra(self, plane):
        assert not square_zero_exists(Ideal(plane, local_generators(Atom.special_atom(2), plane)))

    def test_wrong_hilbert_function(self, plane):
        with pytest.raises(InvalidInputError):
            square_zero_exists(ideal(plane, "x1^2", "x2^2"))


# ── support splitting ────────────────────────────────────────


class TestSupport:
    def test_two_points(self, plane):
        points = support_points(ideal(plane, "x1^2 - x1", "x2"))
        field = plane.field
        assert sorted(tuple(field.to_python(c) for c in p) for p in points) == [(0, 0), (1, 0)]

    def test_irrational_support(self, qq):
        ring = affine_ring(qq, 2)
        with pytest.raises(IrrationalSupportError):
            support_points(ideal(ring, "x1^2 - 2", "x2"))

    def test_split_degrees(self, plane):
        pieces = split_rational_support(ideal(plane, "x1^3 - x1^2", "x2"))
        assert sorted(piece.degree for piece in pieces) == [1, 2]
        for piece in pieces:
            assert local_algebra(piece.ideal).dimension == piece.degree


# ── classification ───────────────────────────────────────────


class TestClassify:
    @pytest.mark.parametrize(
        "gens,expected",
        [
            (("x1^2", "x2^2"), "A2,4"),
            (("x1^6", "x2"), "A1,6"),
            (("x1^2 - x1", "x2"), "A0,1^2"),
            (("x1^3 - x1^2", "x2"), "A1,2 + A0,1"),
            (("x1 - 1", "x2 - 2"), "A0,1"),
            (("x2^2", "x1^3"), "A1sp"),
            (("x2^2 - x1^2", "x1^3"), "A2sp"),
        ],
    )
    def test_labels(self, plane, gens, expected):
        assert str(classify(ideal(plane, *gens))) == expected

    def test_non_gorenstein(self, plane):
        with pytest.raises(NonGorensteinError):
            classify_local(ideal(plane, "x1^2", "x1*x2", "x2^2"))

    def test_unit_ideal(self, plane):
        with pytest.raises(InvalidInputError):
            classify(Ideal.unit(plane))

    def test_degree_out_of_range(self, plane):
        with pytest.raises(ClassificationRangeError):
            classify(ideal(plane, "x1^7", "x2"))

    def test_analyze_local(self, plane):
        report = analyze_local(ideal(plane, "x1^3", "x2"))
        assert report.hilbert_fn == [1, 1, 1]
        assert report.socle_dim == 1
        assert report.gorenstein is True
        assert report.label == "A1,3"

    def test_analyze_non_gorenstein(self, plane):
        report = analyze_local(ideal(plane, "x1^2", "x1*x2", "x2^2"))
        assert report.gorenstein is False
        assert report.label is None


class TestArtinianReport:
    def test_inconsistent_dimension(self):
        with pytest.raises(ValidationError):
            ArtinianReport(dim=5, hilbert_fn=[1, 2, 1], level=2)

    def test_gorenstein_needs_simple_socle(self):
        with pytest.raises(ValidationError):
            ArtinianReport(dim=4, hilbert_fn=[1, 2, 1], level=2, socle_dim=2, gorenstein=True)


# ── seeded properties over the catalog ───────────────────────

CATALOG_NAMES = [str(label) for label in realizable_labels(6)]


@pytest.fixture(scope="module")
def catalog():
    return {entry.name: entry for entry in build_catalog(FieldSpec.prime())}


def random_point(ring, seed):
    rng = random.Random(seed)
    return [ring.field.random_scalar(rng) for _ in range(ring.nvars)]


class TestCatalogProperties:
    @pytest.mark.parametrize("name", CATALOG_NAMES)
    def test_classify_ignores_translation(self, catalog, name):
        model = catalog[name].affine_model
        for seed in range(2):
            moved = translate(model, random_point(model.ring, seed))
            assert str(classify(moved)) == name

    @pytest.mark.parametrize("name", [n for n in CATALOG_NAMES if "+" in n or "^" in n])
    def test_split_pieces_reassemble(self, catalog, name):
        model = catalog[name].affine_model
        pieces = split_rational_support(model)
        assert len(pieces) == len(catalog[name].label.summands)
        whole = None
        for piece in pieces:
            back = translate(piece.ideal, [-c for c in piece.point])
            whole = back if whole is None else intersect(whole, back)
        assert groebner_equal(whole, model)

    def test_pairings_detect_gorenstein(self, catalog, plane):
        graded = [
            e.affine_model for e in catalog.values() if e.label.is_local and e.affine_model.is_homogeneous
        ]
        assert graded
        for I in [*graded, ideal(plane, "x1^2", "x1*x2", "x2^2")]:
            forms = psi_form_ranks(I)
            assert all(f.nondegenerate for f in forms) == (socle_dim(I) == 1)
