# algebra/rings.py
"""
Polynomial rings and the ring-level operations every other module uses.

Polynomials are sympy PolyElements: sparse maps from exponent tuples to
nonzero domain elements, ordered by the ring's monomial order. PolyRing
wraps a sympy ring together with the field and order it was declared with.
"""
import re
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Literal

from loguru import logger
from sympy import Symbol
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing as SympyPolyRing

from algebra.errors import (
    InvalidInputError,
    RingMismatchError,
    ShapeError,
    SingularMatrixError,
    UnknownVariableError,
)
from algebra.fields import FieldSpec
from algebra.orders import GREVLEX, MonomialOrderSpec, OrderKind

Polynomial = PolyElement
Monomial = tuple[int, ...]

RESERVED_VARIABLE = "@t"
_NAME = re.compile(r"^@?[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class PolyRing:
    field: FieldSpec
    variables: tuple[str, ...]
    order: MonomialOrderSpec = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise InvalidInputError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise InvalidInputError(f"duplicate variable names in {list(self.variables)}")
        for name in self.variables:
            if not _NAME.match(name):
                raise InvalidInputError(f"invalid variable name '{name}'")
        if self.order.kind is OrderKind.elim and self.order.k >= len(self.variables):
            raise InvalidInputError(f"{self.order} needs more than {self.order.k} variables")

    @cached_property
    def sympy(self) -> SympyPolyRing:
        symbols = [Symbol(name) for name in self.variables]
        return SympyPolyRing(symbols, self.field.domain, self.order.sympy_order())

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.sympy.gens)

    @property
    def zero(self) -> Polynomial:
        return self.sympy.zero

    @property
    def one(self) -> Polynomial:
        return self.sympy.one

    @property
    def domain(self):
        return self.field.domain

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.variables)}] order {self.order}"

    # --- element construction ---

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(name, f"ring {self}") from None

    def var(self, name: str) -> Polynomial:
        return self.sympy.gens[self.index(name)]

    def constant(self, value) -> Polynomial:
        return self.sympy.ground_new(self.field.scalar(value))

    def monomial(self, exponents: Sequence[int], coefficient=1) -> Polynomial:
        if len(exponents) != self.nvars:
            raise ShapeError(f"exponent vector {tuple(exponents)} has wrong length for {self}")
        return self.sympy.term_new(tuple(exponents), self.field.scalar(coefficient))

    def from_terms(self, terms: Mapping[Monomial, object]) -> Polynomial:
        domain = self.domain
        return self.sympy.from_dict({m: c for m, c in terms.items() if c != domain.zero})

    def parse(self, text: str) -> Polynomial:
        from algebra.parsing import parse_polynomial

        return parse_polynomial(text, self)

    def owns(self, f: Polynomial) -> bool:
        return f.ring == self.sympy

    def check(self, *polys: Polynomial) -> None:
        for f in polys:
            if not self.owns(f):
                raise RingMismatchError(f"polynomial {f} is not an element of {self}")

    # --- derived rings ---

    def with_order(self, order: MonomialOrderSpec) -> "PolyRing":
        return PolyRing(self.field, self.variables, order)

    def with_variables(self, variables: Sequence[str], order: MonomialOrderSpec | None = None) -> "PolyRing":
        if order is None:
            order = self.order if self.order.kind is not OrderKind.elim else GREVLEX
        return PolyRing(self.field, tuple(variables), order)

    def without(self, name: str) -> "PolyRing":
        self.index(name)
        return self.with_variables([v for v in self.variables if v != name])

    # --- printing ---

    def format(self, f: Polynomial) -> str:
        self.check(f)
        return format_polynomial(f, self.variables, self.field)


def format_polynomial(f: Polynomial, variables: Sequence[str], field_spec: FieldSpec) -> str:
    """Canonical text in the polynomial grammar, terms in descending ring order."""
    if not f:
        return "0"
    parts: list[str] = []
    for monom, coeff in f.terms():
        value = field_spec.to_python(coeff)
        negative = value < 0
        magnitude = -value if negative else value
        factors = []
        for name, exp in zip(variables, monom):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append(f"{name}^{exp}")
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = f"{magnitude}*" + "*".join(factors)
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)


# ── monomial helpers ─────────────────────────────────────────


def total_degree(f: Polynomial) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(m) for m in f.itermonoms()), default=-1)


def is_homogeneous(f: Polynomial) -> bool:
    return len({sum(m) for m in f.itermonoms()}) <= 1


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent vectors of the given total degree, in a fixed order."""
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


# ── ring operations ──────────────────────────────────────────


def poly_arith(f: Polynomial, g: Polynomial, op: Literal["add", "sub", "mul"]) -> Polynomial:
    if f.ring != g.ring:
        raise RingMismatchError()
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise InvalidInputError(f"unknown operation '{op}'")


def transfer(f: Polynomial, source: PolyRing, target: PolyRing) -> Polynomial:
    """Re-express f in a ring over the same field whose variables cover those f uses."""
    source.check(f)
    if source.field != target.field:
        raise RingMismatchError(f"cannot move a polynomial from {source.field} to {target.field}")
    if source.sympy == target.sympy:
        return f
    positions = [target.variables.index(v) if v in target.variables else -1 for v in source.variables]
    terms: dict[Monomial, object] = {}
    for monom, coeff in f.iterterms():
        exps = [0] * target.nvars
        for i, e in enumerate(monom):
            if not e:
                continue
            if positions[i] < 0:
                raise UnknownVariableError(source.variables[i], f"target ring {target}")
            exps[positions[i]] = e
        terms[tuple(exps)] = coeff
    return target.sympy.from_dict(terms)


def substitute(
    f: Polynomial,
    ring: PolyRing,
    assignment: Mapping[str, Polynomial],
    target: PolyRing | None = None,
) -> Polynomial:
    """Ring homomorphism sending each assigned variable to its image.

    Unassigned variables map to the variable of the same name in the target
    ring, which defaults to the source ring.
    """
    ring.check(f)
    target = target or ring
    for name, image in assignment.items():
        ring.index(name)
        target.check(image)
    images: list[Polynomial | None] = []
    for name in ring.variables:
        if name in assignment:
            images.append(assignment[name])
        elif name in target.variables:
            images.append(target.var(name))
        else:
            images.append(None)
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in powers:
            powers[key] = images[i] ** e
        return powers[key]

    result = target.zero
    for monom, coeff in f.iterterms():
        term = target.sympy.ground_new(coeff)
        for i, e in enumerate(monom):
            if not e:
                continue
            if images[i] is None:
                raise UnknownVariableError(ring.variables[i], f"target ring {target}")
            term = term * power(i, e)
        result += term
    return result


def scalar_matrix(field_spec: FieldSpec, rows: Sequence[Sequence[object]]) -> DomainMatrix:
    domain = field_spec.domain
    converted = [[v if domain.of_type(v) else field_spec.scalar(v) for v in row] for row in rows]
    return DomainMatrix(converted, (len(converted), len(converted[0]) if converted else 0), domain)


def linear_change(gens: Sequence[Polynomial], ring: PolyRing, matrix: Sequence[Sequence[object]]) -> list[Polynomial]:
    """Replace x_i by sum_j matrix[i][j] * x_j in every generator."""
    n = ring.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ShapeError(f"linear change needs a {n}x{n} matrix")
    M = scalar_matrix(ring.field, matrix)
    if not M.det():
        raise SingularMatrixError()
    entries = M.to_list()
    gens_ = ring.gens
    assignment = {}
    for i, name in enumerate(ring.variables):
        form = ring.zero
        for j, c in enumerate(entries[i]):
            if c:
                form += gens_[j] * c
        assignment[name] = form
    logger.debug(f"linear change on {len(gens)} generators in {ring}")
    return [substitute(g, ring, assignment) for g in gens]


def dehomogenize(f: Polynomial, ring: PolyRing, name: str, target: PolyRing | None = None) -> Polynomial:
    """Set the variable to 1 and land in the ring without it."""
    target = target or ring.without(name)
    index = ring.index(name)
    ring.check(f)
    terms: dict[Monomial, object] = {}
    domain = ring.domain
    for monom, coeff in f.iterterms():
        reduced = monom[:index] + monom[index + 1 :]
        terms[reduced] = terms.get(reduced, domain.zero) + coeff
    reduced_poly = ring.without(name).from_terms(terms)
    return transfer(reduced_poly, ring.without(name), target)


def homogenize(f: Polynomial, ring: PolyRing, name: str) -> Polynomial:
    """Pad every term with powers of the variable up to the total degree of f."""
    ring.check(f)
    index = ring.index(name)
    top = total_degree(f)
    terms: dict[Monomial, object] = {}
    for monom, coeff in f.iterterms():
        exps = list(monom)
        exps[index] += top - sum(monom)
        key = tuple(exps)
        terms[key] = terms.get(key, ring.domain.zero) + coeff
    return ring.from_terms(terms)
