# services/catalog_store.py
"""
Versioned catalog of the degree-6 Gorenstein classes, backed by
fixtures/catalog.json.

The fixture lists every label with its projective model in P^4 where one is
known; affine models are rebuilt from the local normal forms at load time.
"""
import json
import os
from pathlib import Path

from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from algebra.errors import InvalidInputError
from algebra.fields import FieldSpec
from analysis.labels import AlgebraLabel, realizable_labels
from catalog.models import CATALOG_DEGREE, CatalogEntry, model_ideal
from cli.documents import IdealDocument

CATALOG_PATH = Path(__file__).resolve().parent.parent / "fixtures" / "catalog.json"
CATALOG_VERSION = 1


class CatalogRecord(BaseModel):
    label: str = Field(..., description="label such as 'A2,4 + A0,1^2'")
    projective: IdealDocument | None = Field(None, description="nondegenerate model in P^4")


class CatalogFile(BaseModel):
    version: int = Field(..., description="fixture format version")
    degree: int = Field(CATALOG_DEGREE)
    entries: list[CatalogRecord]


class CatalogStore:
    """
    Loads and serves catalog entries.

    Usage:
        store = CatalogStore(field_spec=FieldSpec.prime())
        entry = store.get("A2sp")
    """

    def __init__(self, path: Path = CATALOG_PATH, field_spec: FieldSpec | None = None):
        self._path = Path(path)
        self._field = field_spec or FieldSpec.prime()
        self._entries: dict[str, CatalogEntry] = {}
        self._load()

    def _load(self):
        try:
            with open(self._path, encoding="utf-8") as f:
                raw = json.load(f)
            document = CatalogFile.model_validate(raw)
        except (OSError, json.JSONDecodeError, ValidationError) as e:
            raise InvalidInputError(f"cannot load catalog {self._path}: {e}") from None
        if document.version != CATALOG_VERSION:
            raise InvalidInputError(f"catalog version {document.version} unsupported (expected {CATALOG_VERSION})")

        expected = {str(label) for label in realizable_labels(document.degree)}
        for record in document.entries:
            label = AlgebraLabel.parse(record.label)
            name = str(label)
            if name in self._entries:
                raise InvalidInputError(f"duplicate catalog label {name}")
            if name not in expected:
                raise InvalidInputError(f"catalog label {name} is not a realizable degree-{document.degree} label")
            projective = record.projective.to_ideal(self._field) if record.projective else None
            self._entries[name] = CatalogEntry(
                label=label,
                affine_model=model_ideal(label, self._field),
                projective_model=projective,
                hilbert=label.summands[0].hilbert if label.is_local else (),
            )
        missing = expected - set(self._entries)
        if missing:
            logger.warning(f"Catalog {self._path} is missing {len(missing)} labels: {sorted(missing)}")
        logger.info(f"Catalog loaded from {self._path} ({len(self._entries)} entries, {self._field})")

    @property
    def field_spec(self) -> FieldSpec:
        return self._field

    def names(self) -> list[str]:
        return list(self._entries)

    def entries(self) -> list[CatalogEntry]:
        return list(self._entries.values())

    def get(self, label: str) -> CatalogEntry:
        name = str(AlgebraLabel.parse(label))
        try:
            return self._entries[name]
        except KeyError:
            raise InvalidInputError(f"no catalog entry '{label}'") from None

    def __len__(self) -> int:
        return len(self._entries)


def write_catalog(entries: list[CatalogEntry], path: Path) -> None:
    """Write entries in the fixture format, atomically."""
    document = CatalogFile(
        version=CATALOG_VERSION,
        entries=[
            CatalogRecord(
                label=str(e.label),
                projective=IdealDocument.from_ideal(e.projective_model) if e.projective_model else None,
            )
            for e in entries
        ],
    )
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as f:
        f.write(document.model_dump_json(indent=2, by_alias=True, exclude_none=True))
    os.replace(tmp, path)
