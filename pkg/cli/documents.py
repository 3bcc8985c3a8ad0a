# cli/documents.py
"""
JSON input documents.

  ideal:  {"ring": {...}, "generators": ["x1*x2 - x0*x3", ...]}
  matrix: {"ring": {...}, "entries": [[...], ...]}  (3x3, 2x2x2 or 5x5)
  ring:   {"field": "QQ" | {"Fp": p}, "vars": [...], "order": "grevlex" | "lex" | "grlex" | {"elim": k}}
"""
import json
from pathlib import Path
from typing import Literal, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from algebra.errors import InvalidInputError
from algebra.fields import FieldSpec
from algebra.ideals import Ideal
from algebra.orders import MonomialOrderSpec, OrderKind
from algebra.rings import PolyRing


class PrimeFieldDocument(BaseModel):
    Fp: int = Field(..., description="prime characteristic, not 2 or 3")


class ElimOrderDocument(BaseModel):
    elim: int = Field(..., ge=1, description="block size of the eliminated variables")


class RingDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    field: Union[Literal["QQ"], PrimeFieldDocument] = Field(..., description="coefficient field")
    variables: list[str] = Field(..., alias="vars", min_length=1, description="variable names in order")
    order: Union[Literal["grevlex", "lex", "grlex"], ElimOrderDocument] = Field("grevlex")

    def field_spec(self) -> FieldSpec:
        if self.field == "QQ":
            return FieldSpec.rationals()
        return FieldSpec.prime(self.field.Fp)

    def order_spec(self) -> MonomialOrderSpec:
        if isinstance(self.order, ElimOrderDocument):
            return MonomialOrderSpec.elimination(self.order.elim)
        return MonomialOrderSpec(OrderKind(self.order))

    def to_ring(self, field_spec: FieldSpec | None = None) -> PolyRing:
        return PolyRing(field_spec or self.field_spec(), tuple(self.variables), self.order_spec())

    @classmethod
    def from_ring(cls, ring: PolyRing) -> "RingDocument":
        spec = ring.field
        field = "QQ" if not spec.is_prime_field else PrimeFieldDocument(Fp=spec.characteristic)
        order = ring.order
        order_doc = ElimOrderDocument(elim=order.k) if order.kind is OrderKind.elim else order.kind.value
        return cls(field=field, variables=list(ring.variables), order=order_doc)


class IdealDocument(BaseModel):
    ring: RingDocument
    generators: list[str] = Field(default_factory=list)

    def to_ideal(self, field_spec: FieldSpec | None = None) -> Ideal:
        ring = self.ring.to_ring(field_spec)
        return Ideal.parse(ring, self.generators)

    @classmethod
    def from_ideal(cls, ideal: Ideal) -> "IdealDocument":
        return cls(ring=RingDocument.from_ring(ideal.ring), generators=ideal.format())


Entries = Union[list[list[str]], list[list[list[str]]]]


class MatrixDocument(BaseModel):
    ring: RingDocument
    entries: Entries

    @field_validator("entries")
    @classmethod
    def check_shape(cls, entries):
        n = len(entries)
        if not n:
            raise ValueError("entries must not be empty")
        if any(len(row) != n for row in entries):
            raise ValueError("entries must be square")
        if isinstance(entries[0][0], list):
            if n != 2 or any(len(cell) != 2 for row in entries for cell in row):
                raise ValueError("a three-way array must be 2x2x2")
        elif n not in (3, 5):
            raise ValueError("a matrix must be 3x3 or 5x5")
        return entries

    @property
    def is_cube(self) -> bool:
        return isinstance(self.entries[0][0], list)

    def to_entries(self, ring: PolyRing | None = None) -> list:
        ring = ring or self.ring.to_ring()
        if self.is_cube:
            return [[[ring.parse(e) for e in cell] for cell in row] for row in self.entries]
        matrix = [[ring.parse(e) for e in row] for row in self.entries]
        if len(matrix) == 5:
            for i in range(5):
                for j in range(i, 5):
                    if matrix[i][j] != -matrix[j][i]:
                        raise InvalidInputError(f"5x5 matrix is not antisymmetric at ({i}, {j})")
        return matrix


DocumentT = TypeVar("DocumentT", bound=BaseModel)


def read_document(path: Path, model: type[DocumentT]) -> tuple[DocumentT, str]:
    """Validate a JSON document; returns it with the raw text for digests."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e}") from None
    try:
        return model.model_validate(json.loads(text)), text
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}") from None
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise InvalidInputError(f"{path}: {where}: {first['msg']}") from None

