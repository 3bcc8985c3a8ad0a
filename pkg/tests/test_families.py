# tests/test_families.py
"""Tests for the one-parameter degeneration families."""
import pytest

from algebra.fields import FieldSpec
from catalog.families import PARAMETER, classify_fiber, degeneration_families, family_fiber


@pytest.fixture
def families(fp):
    return {f.name: f for f in degeneration_families(fp)}


class TestFamilies:
    def test_names(self, families):
        assert len(families) == 7
        assert "gfat-to-a35-point" in families

    def test_fiber_ring_drops_parameter(self, families):
        family = families["a16-on-a-line"]
        fiber = family_fiber(family, 0)
        assert PARAMETER not in fiber.ring.variables
        assert fiber.quotient_dimension == 6

    @pytest.mark.parametrize(
        "name",
        ["a16-on-a-line", "a26-to-a24-two-points", "a26-to-a24-a12", "a26-to-a25-point", "a36-to-a35-point"],
    )
    def test_affine_fibers(self, families, name):
        family = families[name]
        for b, label in family.expected.items():
            assert classify_fiber(family, b) == label

    def test_projective_family(self, families):
        family = families["gfat-to-a35-point"]
        assert family.projective
        assert str(classify_fiber(family, 0)) == "A4,6"
        assert str(classify_fiber(family, 1)) == "A3,5 + A0,1"

    def test_fiber_needing_i(self, families):
        family = families["a24-two-points"]
        assert family.needs_i == frozenset({1})
        assert str(classify_fiber(family, 1)) == "A1,2 + A0,1^4"

    def test_rational_field_skips_nothing_at_zero(self):
        family = {f.name: f for f in degeneration_families(FieldSpec.rationals())}["a24-two-points"]
        assert str(classify_fiber(family, 0)) == "A2,4 + A0,1^2"
