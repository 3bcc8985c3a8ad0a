# tests/conftest.py
"""Shared fixtures: fields, rings and a writer for JSON input documents."""
import json

import pytest

from algebra.fields import FieldSpec
from algebra.rings import PolyRing
from catalog.models import projective_ring


@pytest.fixture
def fp():
    return FieldSpec.prime()


@pytest.fixture
def qq():
    return FieldSpec.rationals()


@pytest.fixture
def p4(fp):
    """k[x0..x4] over F_65537."""
    return projective_ring(fp, 4)


@pytest.fixture
def plane_qq(qq):
    """k[x, y] over the rationals."""
    return PolyRing(qq, ("x", "y"))


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document under tmp_path and return its path."""

    def write(name: str, payload) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
