# algebra/ideals.py
"""
Ideals and the ideal algebra: sums, products, powers, intersections, colon
ideals, saturations, elimination, ring-map kernels and graded slices.
"""
from collections.abc import Iterable, Mapping, Sequence
from functools import cached_property

from loguru import logger

from algebra import linalg
from algebra.errors import (
    ExactDivisionError,
    InvalidInputError,
    NotHomogeneousError,
    RingMismatchError,
    SaturationLimitError,
)
from algebra.groebner import (
    GroebnerBasis,
    buchberger,
    is_zero_dimensional,
    normal_form,
    standard_monomials,
)
from algebra.orders import GREVLEX, MonomialOrderSpec, OrderKind
from algebra.rings import (
    RESERVED_VARIABLE,
    Polynomial,
    PolyRing,
    dehomogenize,
    is_homogeneous,
    linear_change,
    monomials_of_degree,
    substitute,
    total_degree,
    transfer,
)

SATURATION_CAP = 50


class Ideal:
    """A finitely generated ideal with a lazily computed reduced Groebner basis."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial]):
        gens = tuple(gens)
        ring.check(*gens)
        self.ring = ring
        self.gens: tuple[Polynomial, ...] = tuple(g for g in gens if g)

    @classmethod
    def from_basis(cls, basis: GroebnerBasis) -> "Ideal":
        """An ideal whose generators are a known reduced basis; the cache is pre-filled.

        No membership check is run: every caller passes a basis produced here (a
        buchberger result, or the grevlex restriction of a reduced elim(k) basis),
        so generators and cache span the same ideal by construction.
        """
        ideal = cls(basis.ring, basis.elements)
        ideal.__dict__["groebner"] = basis
        return ideal

    @classmethod
    def parse(cls, ring: PolyRing, texts: Iterable[str]) -> "Ideal":
        return cls(ring, [ring.parse(text) for text in texts])

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one])

    @cached_property
    def groebner(self) -> GroebnerBasis:
        return buchberger(self.gens, self.ring)

    # --- predicates ---

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self.groebner)

    def contains_ideal(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return all(self.contains(g) for g in other.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.groebner.is_unit_ideal

    @property
    def is_homogeneous(self) -> bool:
        return all(is_homogeneous(g) for g in self.gens)

    @property
    def is_zero_dimensional(self) -> bool:
        return is_zero_dimensional(self.groebner)

    @cached_property
    def quotient_dimension(self) -> int:
        """dim_k of R/I for a zero-dimensional ideal."""
        return standard_monomials(self.groebner).dimension

    @property
    def max_degree(self) -> int:
        return max((total_degree(g) for g in self.gens), default=0)

    # --- comparisons and printing ---

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner.elements == other.groebner.elements

    def __hash__(self) -> int:
        return hash((self.ring, self.groebner.elements))

    def format(self) -> list[str]:
        return [self.ring.format(g) for g in self.gens]

    def __repr__(self) -> str:
        return f"Ideal({', '.join(self.format()) or '0'})"

    # --- convenience wrappers ---

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __pow__(self, exponent: int) -> "Ideal":
        return ideal_power(self, exponent)


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


# ── generator-level constructions ────────────────────────────


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def ideal_power(I: Ideal, exponent: int) -> Ideal:
    if exponent < 0:
        raise InvalidInputError("negative ideal power")
    if exponent == 0:
        logger.warning("ideal power with exponent 0 is the unit ideal")
        return Ideal.unit(I.ring)
    result = I
    for _ in range(exponent - 1):
        result = ideal_product(result, I)
    return result


# ── elimination-based operations ─────────────────────────────


def _restricted_basis(basis: GroebnerBasis, k: int, target: PolyRing) -> list[Polynomial]:
    """Basis elements free of the first k variables, moved into the target ring."""
    kept = [g for g in basis.elements if all(not any(m[:k]) for m in g.itermonoms())]
    return [transfer(g, basis.ring, target) for g in kept]


def _as_ideal(ring: PolyRing, polys: list[Polynomial]) -> Ideal:
    # the restriction of a reduced elim(k) basis is reduced for grevlex on the rest
    if ring.order == GREVLEX:
        polys = sorted(polys, key=lambda g: ring.sympy.order(g.LM))
        return Ideal.from_basis(GroebnerBasis(ring, tuple(polys)))
    return Ideal(ring, polys)


def eliminate(I: Ideal, first_k: int) -> Ideal:
    """I intersected with the subring in the variables after the first k."""
    ring = I.ring
    if not 0 < first_k < ring.nvars:
        raise InvalidInputError(f"cannot eliminate {first_k} of {ring.nvars} variables")
    elim_ring = ring.with_order(MonomialOrderSpec.elimination(first_k))
    gens = [transfer(g, ring, elim_ring) for g in I.gens]
    basis = buchberger(gens, elim_ring)
    rest = ring.with_variables(ring.variables[first_k:])
    return _as_ideal(rest, _restricted_basis(basis, first_k, rest))


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J as the t-free part of t*I + (1 - t)*J."""
    _same_ring(I, J)
    ring = I.ring
    if RESERVED_VARIABLE in ring.variables:
        raise InvalidInputError(f"'{RESERVED_VARIABLE}' is reserved")
    if I.is_zero or J.is_zero:
        return Ideal(ring, [])
    big = PolyRing(ring.field, (RESERVED_VARIABLE,) + ring.variables, MonomialOrderSpec.elimination(1))
    t = big.var(RESERVED_VARIABLE)
    gens = [t * transfer(f, ring, big) for f in I.gens]
    gens += [(big.one - t) * transfer(g, ring, big) for g in J.gens]
    basis = buchberger(gens, big)
    return _as_ideal(ring, _restricted_basis(basis, 1, ring))


def quotient_by_element(I: Ideal, f: Polynomial) -> Ideal:
    """I : f, by dividing a basis of I ∩ (f) exactly by f."""
    ring = I.ring
    ring.check(f)
    if not f:
        raise InvalidInputError("colon by the zero polynomial")
    if I.contains(f):
        return Ideal.unit(ring)
    meet = intersect(I, Ideal(ring, [f]))
    quotients = []
    for g in meet.groebner.elements:
        q, r = g.div(f)
        if r:
            raise ExactDivisionError(f"{ring.format(g)} is not divisible by {ring.format(f)}")
        quotients.append(q)
    return Ideal(ring, quotients)


def colon(I: Ideal, J: Ideal) -> Ideal:
    """I : J as the intersection of I : f over the generators f of J."""
    _same_ring(I, J)
    if J.is_zero:
        raise InvalidInputError("colon by the zero ideal")
    result: Ideal | None = None
    for f in J.gens:
        part = quotient_by_element(I, f)
        result = part if result is None else intersect(result, part)
    return result


def saturate(I: Ideal, J: Ideal, max_iterations: int = SATURATION_CAP) -> Ideal:
    current = I
    for step in range(1, max_iterations + 1):
        nxt = colon(current, J)
        if nxt == current:
            logger.debug(f"saturation stable after {step} colon steps")
            return current
        current = nxt
    raise SaturationLimitError(f"saturation did not stabilize in {max_iterations} steps")


# ── graded pieces and maps ───────────────────────────────────


def graded_component_dim(I: Ideal, t: int) -> int:
    """dim_k I_t from the coefficient matrix of all monomial multiples of generators."""
    if not I.is_homogeneous:
        raise NotHomogeneousError("graded_component_dim needs homogeneous generators")
    if t < 0:
        return 0
    n = I.ring.nvars
    columns = {m: i for i, m in enumerate(monomials_of_degree(n, t))}
    zero = I.ring.domain.zero
    rows = []
    for g in I.gens:
        shift = t - total_degree(g)
        if shift < 0:
            continue
        for m in monomials_of_degree(n, shift):
            row = [zero] * len(columns)
            for monom, coeff in g.mul_monom(m).iterterms():
                row[columns[monom]] = coeff
            rows.append(row)
    return linalg.rank(rows, len(columns), I.ring.domain)


def ring_map_kernel(
    source: PolyRing,
    target_gens: Sequence[Polynomial],
    images: Mapping[str, Polynomial],
) -> Ideal:
    """Preimage of (target_gens) under k[y] -> source, y_i -> images[y_i].

    When all data is homogeneous and the images share one degree, the result
    is saturated by the irrelevant ideal of the y-ring.
    """
    if not images:
        raise InvalidInputError("ring_map_kernel needs at least one image")
    new_vars = tuple(images)
    clash = set(new_vars) & set(source.variables)
    if clash:
        raise InvalidInputError(f"new variables {sorted(clash)} already name source variables")
    source.check(*target_gens, *images.values())
    k = source.nvars
    big = PolyRing(source.field, source.variables + new_vars, MonomialOrderSpec.elimination(k))
    gens = [transfer(f, source, big) for f in target_gens]
    gens += [big.var(y) - transfer(images[y], source, big) for y in new_vars]
    y_ring = PolyRing(source.field, new_vars)
    kernel = _as_ideal(y_ring, _restricted_basis(buchberger(gens, big), k, y_ring))
    degrees = {total_degree(f) for f in images.values()}
    cone = len(degrees) == 1 and all(is_homogeneous(f) for f in (*target_gens, *images.values()))
    if cone and not kernel.is_zero:
        kernel = saturate(kernel, Ideal(y_ring, y_ring.gens))
    return kernel


# ── coordinate changes ───────────────────────────────────────


def change_coordinates(I: Ideal, matrix: Sequence[Sequence[object]]) -> Ideal:
    return Ideal(I.ring, linear_change(I.gens, I.ring, matrix))


def translate(I: Ideal, point: Sequence[object]) -> Ideal:
    """Substitute x_i -> x_i + a_i, which moves the point a to the origin."""
    ring = I.ring
    if len(point) != ring.nvars:
        raise InvalidInputError(f"point {list(point)} has wrong length for {ring}")
    assignment = {
        name: ring.var(name) + ring.sympy.ground_new(_scalar(ring, a)) for name, a in zip(ring.variables, point)
    }
    return Ideal(ring, [substitute(g, ring, assignment) for g in I.gens])


def dehomogenize_ideal(I: Ideal, name: str, target: PolyRing | None = None) -> Ideal:
    target = target or I.ring.without(name)
    return Ideal(target, [dehomogenize(g, I.ring, name, target) for g in I.gens])


def coordinate_ideal(ring: PolyRing, names: Iterable[str]) -> Ideal:
    return Ideal(ring, [ring.var(name) for name in names])


def point_ideal(ring: PolyRing, point: Sequence[object]) -> Ideal:
    """Maximal ideal of an affine rational point."""
    return Ideal(ring, [x - ring.sympy.ground_new(_scalar(ring, a)) for x, a in zip(ring.gens, point)])


def _scalar(ring: PolyRing, a):
    return a if ring.domain.of_type(a) else ring.field.scalar(a)


# ── canonical comparisons ────────────────────────────────────


def is_member(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


def groebner_equal(I: Ideal, J: Ideal) -> bool:
    """Equality of ideals by comparing reduced Groebner bases."""
    _same_ring(I, J)
    return I.groebner.elements == J.groebner.elements
