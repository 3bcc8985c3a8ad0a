# analysis/geometry.py
"""
Projective zero-dimensional schemes X = V(I) in P^n, I homogeneous.

Hilbert functions and degree, the span stratification, the arithmetically
Gorenstein test through an Artinian reduction, low-degree Betti numbers,
tangent-space dimensions of Hilbert-scheme points, projection from a simple
point and vanishing ideals of rational points.
"""
import random
from collections.abc import Sequence
from dataclasses import dataclass
from math import comb

from loguru import logger
from pydantic import BaseModel, Field, model_validator

from algebra import linalg
from algebra.errors import (
    AlgebraError,
    ConstructionError,
    InadmissibleStratumError,
    InvalidInputError,
    NotArithmeticallyGorensteinError,
    NotHomogeneousError,
    NotReducedPointError,
    NotZeroDimensionalError,
    TrialsExhaustedError,
)
from algebra.groebner import normal_form, standard_monomials
from algebra.ideals import (
    Ideal,
    change_coordinates,
    colon,
    coordinate_ideal,
    dehomogenize_ideal,
    eliminate,
    graded_component_dim,
    ideal_power,
    ideal_sum,
    quotient_by_element,
)
from algebra.quotient import QuotientAlgebra
from algebra.rings import Polynomial, PolyRing, monomials_of_degree
from analysis.artinian import classify, socle_basis
from analysis.labels import AlgebraLabel

DEFAULT_TRIALS = 50


class SchemeReport(BaseModel):
    """Projective invariants of a zero-dimensional scheme."""

    ambient_dim: int = Field(..., description="n for X in P^n")
    degree: int = Field(..., description="stable value of the Hilbert function")
    hilbert_fn: list[int] = Field(..., description="h_X(0..T)")
    span_codim: int = Field(..., description="number of independent linear forms in I_X")
    stratum: str = Field(..., description="stratum by span codimension")
    aG: bool = Field(..., description="arithmetically Gorenstein")
    nondegenerate: bool = Field(..., description="X spans P^n")
    delta_h: list[int] = Field(default_factory=list, description="Hilbert function of an Artinian reduction")
    tangent_dim: int | None = Field(None, description="dim of the tangent space to the Hilbert scheme")
    label: str | None = Field(None, description="isomorphism class of the scheme")

    @model_validator(mode="after")
    def check_consistency(self):
        h = self.hilbert_fn
        if any(a > b for a, b in zip(h, h[1:])):
            raise ValueError("Hilbert function of a zero-dimensional scheme is nondecreasing")
        if h and h[-1] != self.degree:
            raise ValueError("Hilbert function does not stabilize at the degree")
        if self.nondegenerate != (self.span_codim == 0):
            raise ValueError("nondegenerate means span codimension 0")
        if len(h) > 1 and h[1] != self.ambient_dim + 1 - self.span_codim:
            raise ValueError("h(1) disagrees with the span codimension")
        return self


@dataclass(frozen=True)
class Stratum:
    span_codim: int
    label: str
    admissible: bool


@dataclass(frozen=True)
class ArtinianReduction:
    form: Polynomial
    ideal: Ideal
    delta_h: tuple[int, ...]
    socle_dim: int

    @property
    def symmetric(self) -> bool:
        return self.delta_h == self.delta_h[::-1]

    @property
    def gorenstein(self) -> bool:
        return self.socle_dim == 1


@dataclass(frozen=True)
class AffineChart:
    """Dehomogenization of I (after an optional coordinate change) along a regular variable."""

    ideal: Ideal
    variable: str
    matrix: tuple[tuple, ...] | None
    projective: Ideal


# ── Hilbert function and degree ──────────────────────────────


def _require_homogeneous(I: Ideal) -> None:
    if not I.is_homogeneous:
        raise NotHomogeneousError(f"{I!r} is not homogeneous")


def hilbert_function(I: Ideal, up_to: int) -> list[int]:
    """h(t) for t = 0..up_to, counted on standard monomials."""
    _require_homogeneous(I)
    basis = standard_monomials(I.groebner, degree_cap=up_to)
    counts = [0] * (up_to + 1)
    for m in basis.monomials:
        counts[sum(m)] += 1
    return counts


def stabilization_degree(I: Ideal) -> int:
    return I.max_degree + I.ring.nvars + 2


def degree(I: Ideal) -> int:
    """Stable value of h, which must repeat over the last three degrees computed."""
    top = stabilization_degree(I)
    h = hilbert_function(I, top)
    if not (h[top - 2] == h[top - 1] == h[top]) or h[top] == 0:
        raise NotZeroDimensionalError(f"Hilbert function {h} does not stabilize at a positive value")
    return h[top]


def is_zero_dimensional_scheme(I: Ideal) -> bool:
    try:
        degree(I)
    except NotZeroDimensionalError:
        return False
    return True


def general_points_hilbert(n: int, d: int, t: int) -> int:
    """Hilbert function of d general points in P^n."""
    return min(comb(n + t, n), d)


def h_max(d: int, t: int) -> int:
    """Largest Hilbert function of a nondegenerate degree-d scheme in P^(d-2)."""
    if t == 0:
        return 1
    if t == 1:
        return d - 1
    return d


# ── span stratification ──────────────────────────────────────


def span_codim(I: Ideal) -> int:
    return graded_component_dim(I, 1)


def admissible_span_codims(n: int, d: int) -> list[int]:
    """Span codimensions an arithmetically Gorenstein degree-d scheme in P^n can have."""
    if d < 1:
        raise InvalidInputError("degree must be positive")
    if d == 1:
        values = [n]
    elif d in (2, 3):
        values = [n - 1]
    else:
        values = [n + 2 - d, *range(n + 1 - d // 2, n)]
    return sorted({r for r in values if 0 <= r <= n})


def stratum(I: Ideal, d: int | None = None, ag: bool = False) -> Stratum:
    """Span codimension r and its stratum; with ag set, an inadmissible r raises."""
    _require_homogeneous(I)
    n = I.ring.nvars - 1
    d = degree(I) if d is None else d
    r = span_codim(I)
    admissible = r in admissible_span_codims(n, d)
    if ag and not admissible:
        raise InadmissibleStratumError(f"span codimension {r} is impossible for an aG scheme of degree {d} in P^{n}")
    return Stratum(span_codim=r, label=f"aG,{r}", admissible=admissible)


# ── regular forms and the aG test ────────────────────────────


def is_regular_form(I: Ideal, form: Polynomial) -> bool:
    return quotient_by_element(I, form) == I


def _random_linear_form(ring: PolyRing, rng: random.Random) -> Polynomial:
    while True:
        form = ring.zero
        for x in ring.gens:
            form += x * ring.field.random_scalar(rng)
        if form:
            return form


def regular_linear_form(I: Ideal, seed: int = 0, trials: int = DEFAULT_TRIALS) -> Polynomial:
    """A linear form that is a nonzerodivisor modulo I: coordinates first, then seeded random forms."""
    _require_homogeneous(I)
    ring = I.ring
    rng = random.Random(seed)
    candidates = list(ring.gens)
    for attempt in range(trials):
        form = candidates[attempt] if attempt < len(candidates) else _random_linear_form(ring, rng)
        if is_regular_form(I, form):
            return form
    raise TrialsExhaustedError(f"no regular linear form found in {trials} trials")


def artinian_reduction(I: Ideal, seed: int = 0) -> ArtinianReduction:
    degree(I)
    form = regular_linear_form(I, seed)
    reduced = ideal_sum(I, Ideal(I.ring, [form]))
    algebra = QuotientAlgebra(reduced)
    top = max(sum(m) for m in algebra.basis)
    delta = [0] * (top + 1)
    for m in algebra.basis:
        delta[sum(m)] += 1
    return ArtinianReduction(
        form=form, ideal=reduced, delta_h=tuple(delta), socle_dim=len(socle_basis(algebra))
    )


def is_aG(I: Ideal, seed: int = 0) -> bool:
    """Arithmetically Gorenstein: the Artinian reduction has a one-dimensional socle."""
    return artinian_reduction(I, seed).gorenstein


# ── Betti numbers ────────────────────────────────────────────


def betti_expected(d: int, h: int) -> int:
    """Rank of the h-th module in the resolution of a nondegenerate aG scheme of degree d."""
    if d < 4 or not 1 <= h <= d - 3:
        raise InvalidInputError(f"betti_expected needs d >= 4 and 1 <= h <= d - 3, got d={d}, h={h}")
    numerator = h * (d - 2 - h) * comb(d, h + 1)
    if numerator % (d - 1):
        raise ArithmeticError(f"beta_{h} is not integral for d={d}")
    return numerator // (d - 1)


def betti_check_low_degrees(I: Ideal, seed: int = 0) -> tuple[int, int]:
    """(dim I_2, linear syzygies among the quadrics) for a nondegenerate aG scheme."""
    if span_codim(I):
        raise InvalidInputError("betti_check_low_degrees needs a nondegenerate scheme")
    if not is_aG(I, seed):
        raise NotArithmeticallyGorensteinError("betti_check_low_degrees needs an aG scheme")
    b1 = graded_component_dim(I, 2)
    return b1, I.ring.nvars * b1 - graded_component_dim(I, 3)


# ── affine charts and tangent spaces ─────────────────────────


def affine_chart(I: Ideal, seed: int = 0, trials: int = DEFAULT_TRIALS) -> AffineChart:
    """An affine ideal of X in a chart that contains all of its support."""
    _require_homogeneous(I)
    ring = I.ring
    for name, x in zip(ring.variables, ring.gens):
        if is_regular_form(I, x):
            return AffineChart(dehomogenize_ideal(I, name), name, None, I)
    rng = random.Random(seed)
    first = ring.variables[0]
    for attempt in range(trials):
        matrix = linalg.random_invertible(ring.field, ring.nvars, rng)
        moved = change_coordinates(I, matrix)
        if is_regular_form(moved, ring.gens[0]):
            logger.debug(f"affine chart found after {attempt + 1} coordinate changes")
            frozen = tuple(tuple(row) for row in matrix)
            return AffineChart(dehomogenize_ideal(moved, first), first, frozen, moved)
    raise TrialsExhaustedError(f"support meets every chart hyperplane after {trials} coordinate changes")


def affine_tangent_dim(Ia: Ideal) -> int:
    """dim_k I/I^2 = dim_k R/I^2 - dim_k R/I."""
    return ideal_power(Ia, 2).quotient_dimension - Ia.quotient_dimension


def affine_tangent_dim_direct(Ia: Ideal) -> int:
    """dim_k I/I^2 as the rank of {b*g mod I^2 : b standard monomial of R/I, g generator}."""
    square = ideal_power(Ia, 2).groebner
    basis = standard_monomials(Ia.groebner).monomials
    residues = [normal_form(g.mul_monom(b), square) for g in Ia.gens for b in basis]
    columns: dict = {}
    for r in residues:
        for monom in r.itermonoms():
            columns.setdefault(monom, len(columns))
    zero = Ia.ring.domain.zero
    rows = []
    for r in residues:
        row = [zero] * len(columns)
        for monom, coeff in r.iterterms():
            row[columns[monom]] = coeff
        rows.append(row)
    return linalg.rank(rows, len(columns), Ia.ring.domain)


def _require_ag(I: Ideal, seed: int) -> None:
    if not is_aG(I, seed):
        raise NotArithmeticallyGorensteinError("tangent dimension is only defined here for aG schemes")


def tangent_dim(I: Ideal, seed: int = 0) -> int:
    """h^0 of the normal sheaf of an aG scheme, as dim I/I^2 of its affine ideal."""
    _require_ag(I, seed)
    return affine_tangent_dim(affine_chart(I, seed).ideal)


def tangent_dim_direct(I: Ideal, seed: int = 0) -> int:
    _require_ag(I, seed)
    return affine_tangent_dim_direct(affine_chart(I, seed).ideal)


def classify_scheme(I: Ideal, seed: int = 0) -> AlgebraLabel:
    return classify(affine_chart(I, seed).ideal)


# ── projection from a simple point ───────────────────────────


def _moving_matrix(field_spec, point: Sequence[object]) -> list[list]:
    """Invertible matrix whose first column is the point."""
    n = len(point)
    pivot = next(i for i, c in enumerate(point) if c)
    others = [j for j in range(n) if j != pivot]
    one, zero = field_spec.domain.one, field_spec.domain.zero
    columns = [list(point)] + [[one if i == j else zero for i in range(n)] for j in others]
    return linalg.transpose(columns)


def project_from_point(I: Ideal, point: Sequence[object], seed: int = 0) -> Ideal:
    """Ideal of the image of X minus a simple point P under projection from P."""
    _require_homogeneous(I)
    ring = I.ring
    if len(point) != ring.nvars:
        raise InvalidInputError(f"point has {len(point)} coordinates, ring has {ring.nvars} variables")
    point = [c if ring.domain.of_type(c) else ring.field.scalar(c) for c in point]
    if not any(point):
        raise InvalidInputError("the zero vector is not a projective point")
    if any(g(*point) for g in I.gens):
        raise InvalidInputError("the center of projection is not on the scheme")
    d = degree(I)
    moved = change_coordinates(I, _moving_matrix(ring.field, point))
    first = ring.variables[0]
    rest = ring.variables[1:]
    chart = dehomogenize_ideal(moved, first)
    cotangent = ideal_sum(chart, ideal_power(coordinate_ideal(chart.ring, rest), 2))
    if cotangent.quotient_dimension != 1:
        raise NotReducedPointError(f"local ring at the center has cotangent colength {cotangent.quotient_dimension}")
    residual = colon(moved, coordinate_ideal(ring, rest))
    image = eliminate(residual, 1)
    image_degree = degree(image)
    if image_degree != d - 1:
        raise ConstructionError(f"projection has degree {image_degree}, expected {d - 1}")
    if not is_aG(image, seed):
        raise NotArithmeticallyGorensteinError("projection from the point is not aG")
    return image


# ── vanishing ideals of points ───────────────────────────────


def points_ideal(ring: PolyRing, points: Sequence[Sequence[object]]) -> Ideal:
    """Homogeneous ideal of distinct rational points of P^n, degree by degree."""
    if not points:
        raise InvalidInputError("points_ideal needs at least one point")
    domain = ring.domain
    values = [[c if domain.of_type(c) else ring.field.scalar(c) for c in p] for p in points]
    if any(len(p) != ring.nvars for p in values):
        raise InvalidInputError("point dimension does not match the ring")
    ideal = Ideal(ring, [])
    regular_at = None
    for t in range(1, len(points) + 2):
        monomials = list(monomials_of_degree(ring.nvars, t))
        evaluation = [[_evaluate_monomial(m, p) for m in monomials] for p in values]
        kernel = linalg.nullspace(evaluation, len(monomials), domain)
        if graded_component_dim(ideal, t) < len(kernel):
            forms = [ring.from_terms(dict(zip(monomials, v))) for v in kernel]
            ideal = Ideal(ring, ideal.gens + tuple(forms))
        if regular_at is None and len(monomials) - len(kernel) == len(points):
            regular_at = t
        if regular_at is not None and t > regular_at:
            return ideal
    raise InvalidInputError("points are not distinct")


def _evaluate_monomial(monomial, point):
    value = None
    for c, e in zip(point, monomial):
        if e:
            term = c**e
            value = term if value is None else value * term
    return value


# ── full report ──────────────────────────────────────────────


def scheme_report(I: Ideal, seed: int = 0, with_tangent: bool = True, with_label: bool = True) -> SchemeReport:
    d = degree(I)
    top = stabilization_degree(I)
    h = hilbert_function(I, top)
    reduction = artinian_reduction(I, seed)
    layer = stratum(I, d, ag=reduction.gorenstein)
    tangent = None
    if with_tangent and reduction.gorenstein:
        tangent = affine_tangent_dim(affine_chart(I, seed).ideal)
    label = None
    if with_label:
        try:
            label = str(classify_scheme(I, seed))
        except AlgebraError as exc:
            logger.debug(f"scheme left unlabeled: {exc}")
    return SchemeReport(
        ambient_dim=I.ring.nvars - 1,
        degree=d,
        hilbert_fn=h,
        span_codim=layer.span_codim,
        stratum=layer.label,
        aG=reduction.gorenstein,
        nondegenerate=layer.span_codim == 0,
        delta_h=list(reduction.delta_h),
        tangent_dim=tangent,
        label=label,
    )
