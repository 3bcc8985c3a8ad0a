# algebra/fields.py
"""
Coefficient fields: the rationals and prime fields F_p with p not in {2, 3}.

Scalars are sympy domain elements (QQ or GF(p)); this module only wraps the
domain choice, validation and conversion to and from plain Python numbers.
"""
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property

from sympy import Integer, Rational, isprime
from sympy.ntheory import sqrt_mod
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from algebra.errors import InvalidInputError, UnsupportedCharacteristicError

DEFAULT_PRIME = 65537


class FieldKind(str, Enum):
    rationals = "QQ"
    prime = "Fp"


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    characteristic: int

    def __post_init__(self):
        if self.kind is FieldKind.rationals:
            if self.characteristic != 0:
                raise InvalidInputError("the rationals have characteristic 0")
            return
        p = self.characteristic
        if p in (2, 3):
            raise UnsupportedCharacteristicError(p)
        if p < 2 or not isprime(p):
            raise InvalidInputError(f"Fp({p}): {p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.rationals, 0)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "FieldSpec":
        return cls(FieldKind.prime, p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts 'QQ' or 'Fp(p)'."""
        compact = text.replace(" ", "")
        if compact == "QQ":
            return cls.rationals()
        if compact.startswith("Fp(") and compact.endswith(")") and compact[3:-1].isdigit():
            return cls.prime(int(compact[3:-1]))
        raise InvalidInputError(f"unknown field '{text}'")

    @cached_property
    def domain(self) -> Domain:
        if self.kind is FieldKind.rationals:
            return QQ
        return GF(self.characteristic)

    @property
    def is_prime_field(self) -> bool:
        return self.kind is FieldKind.prime

    def __str__(self) -> str:
        return "QQ" if self.kind is FieldKind.rationals else f"Fp({self.characteristic})"

    # --- scalars ---

    def scalar(self, value):
        """Convert an int, Fraction, sympy Rational or 'a/b' string into the field."""
        K = self.domain
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Rational) and not isinstance(value, Integer):
            value = Fraction(int(value.p), int(value.q))
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return K(value.numerator)
            return K.quo(K(value.numerator), K(value.denominator))
        if isinstance(value, Integer):
            return K(int(value))
        if isinstance(value, int):
            return K(value)
        return K.convert(value)

    def to_python(self, c) -> int | Fraction:
        """Plain number for printing; residues use the symmetric representative."""
        value = self.domain.to_sympy(c)
        if value.is_Integer:
            return int(value)
        return Fraction(int(value.p), int(value.q))

    def format(self, c) -> str:
        return str(self.to_python(c))

    def sqrt_minus_one(self):
        """A square root of -1, or None when the field has none."""
        if not self.is_prime_field:
            return None
        p = self.characteristic
        if p % 4 != 1:
            return None
        return self.domain(sqrt_mod(p - 1, p))

    def random_scalar(self, rng: random.Random, nonzero: bool = False, bound: int = 9):
        """Uniform residue over F_p; a small integer over QQ."""
        while True:
            if self.is_prime_field:
                c = self.domain(rng.randrange(self.characteristic))
            else:
                c = self.domain(rng.randint(-bound, bound))
            if c or not nonzero:
                return c
