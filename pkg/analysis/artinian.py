# analysis/artinian.py
"""
Local Artinian algebras A = k[x1..xn]/I: the Hilbert function of the
maximal-ideal filtration, socle, the multiplication forms of graded
algebras, support splitting and the classification in degree <= 6.

Everything is linear algebra in the coordinates of the standard-monomial
basis of A (see algebra.quotient).
"""
from dataclasses import dataclass
from itertools import product

from loguru import logger
from pydantic import BaseModel, Field, model_validator

from algebra import linalg
from algebra.errors import (
    ClassificationRangeError,
    InvalidInputError,
    IrrationalSupportError,
    NonGorensteinError,
    NotHomogeneousError,
    SupportNotAtOriginError,
    UnrealizableHilbertFunctionError,
)
from algebra.ideals import Ideal, saturate, translate
from algebra.quotient import QuotientAlgebra, Vector
from algebra.rings import PolyRing
from analysis.labels import (
    MAX_CLASSIFIED_DEGREE,
    POINT,
    SPECIAL_HILBERT,
    AlgebraLabel,
    Atom,
    realizable_atoms,
)


class ArtinianReport(BaseModel):
    """Invariants of a local Artinian algebra."""

    dim: int = Field(..., description="dim_k A")
    hilbert_fn: list[int] = Field(..., description="dimensions of M^i / M^(i+1)")
    level: int = Field(..., description="largest e with M^e != 0")
    socle_dim: int | None = Field(None, description="dim_k (0 : M)")
    gorenstein: bool | None = Field(None, description="socle of dimension one")
    label: str | None = Field(None, description="isomorphism class when classified")

    @model_validator(mode="after")
    def check_consistency(self):
        if sum(self.hilbert_fn) != self.dim:
            raise ValueError("Hilbert function does not add up to the dimension")
        if self.hilbert_fn and (self.hilbert_fn[0] != 1 or self.hilbert_fn[-1] < 1):
            raise ValueError("Hilbert function must start at 1 and end nonzero")
        if self.gorenstein and self.socle_dim != 1:
            raise ValueError("a Gorenstein local algebra has a one-dimensional socle")
        return self


@dataclass(frozen=True)
class PsiForm:
    """Multiplication pairing A_i x A_(e-i) -> A_e of a graded local algebra."""

    i: int
    rank: int
    expected_rank: int
    nondegenerate: bool


@dataclass(frozen=True)
class LocalPiece:
    """Component of a zero-dimensional ideal at one rational point, moved to the origin."""

    point: tuple
    ideal: Ideal

    @property
    def degree(self) -> int:
        return self.ideal.quotient_dimension


# ── local algebra structure ──────────────────────────────────


def local_algebra(I: Ideal) -> QuotientAlgebra:
    """R/I, checking that I is zero-dimensional and supported at the origin."""
    algebra = QuotientAlgebra(I)
    if not algebra.contains_origin_only():
        raise SupportNotAtOriginError(f"support of {I!r} is not the origin")
    return algebra


def maximal_ideal_powers(algebra: QuotientAlgebra) -> list[list[Vector]]:
    """Row bases of M^0 = A, M^1, M^2, ... down to the last nonzero power."""
    n = algebra.dimension
    if algebra.basis[0] != (0,) * algebra.ring.nvars:
        raise SupportNotAtOriginError("1 is not a standard monomial")
    powers = [[algebra.unit_vector(i) for i in range(n)]]
    current = [algebra.unit_vector(i) for i in range(1, n)]
    while current:
        powers.append(current)
        images = []
        for k in range(algebra.ring.nvars):
            images.extend(algebra.multiply_rows(current, k))
        nxt = linalg.row_basis(images, n, algebra.domain)
        if len(nxt) == len(current):
            raise SupportNotAtOriginError("the maximal ideal is not nilpotent")
        current = nxt
    return powers


def _hilbert_from_powers(powers: list[list[Vector]]) -> list[int]:
    dims = [len(p) for p in powers] + [0]
    return [dims[i] - dims[i + 1] for i in range(len(powers))]


def filtration_hilbert(I: Ideal) -> ArtinianReport:
    """dim, H(A) and level of an origin-local algebra."""
    hilbert = _hilbert_from_powers(maximal_ideal_powers(local_algebra(I)))
    return ArtinianReport(dim=sum(hilbert), hilbert_fn=hilbert, level=len(hilbert) - 1)


def socle_basis(algebra: QuotientAlgebra) -> list[Vector]:
    """Vectors killed by every variable."""
    rows: list[list[object]] = []
    for matrix in algebra.variable_matrices:
        rows.extend(linalg.transpose(matrix.to_list()))
    return linalg.nullspace(rows, algebra.dimension, algebra.domain)


def socle_dim(I: Ideal) -> int:
    return len(socle_basis(local_algebra(I)))


def psi_form_ranks(I: Ideal) -> list[PsiForm]:
    """Ranks of the multiplication pairings of a graded local algebra.

    The algebra is Gorenstein iff its top piece is one-dimensional and every
    pairing is nondegenerate.
    """
    if not I.is_homogeneous:
        raise NotHomogeneousError("psi forms need a graded algebra")
    algebra = local_algebra(I)
    by_degree: dict[int, list[int]] = {}
    for index, monom in enumerate(algebra.basis):
        by_degree.setdefault(sum(monom), []).append(index)
    e = max(by_degree)
    top = by_degree[e]
    forms = []
    for i in range(e + 1):
        left, right = by_degree.get(i, []), by_degree.get(e - i, [])
        rows = []
        for a in left:
            row = []
            for b in right:
                coords = algebra.coordinates(algebra.basis_element(a) * algebra.basis_element(b))
                row.extend(coords[q] for q in top)
            rows.append(row)
        rank = linalg.rank(rows, len(right) * len(top), algebra.domain)
        nondegenerate = len(top) == 1 and len(left) == len(right) == rank
        forms.append(PsiForm(i=i, rank=rank, expected_rank=len(left), nondegenerate=nondegenerate))
    return forms


def square_zero_exists(I: Ideal) -> bool:
    """Whether some v in M \\ M^2 has v^2 = 0 over the algebraic closure.

    v runs over all of M with unknown coordinates c; the coefficients of v^2
    cut out a cone in c-space, which is saturated by the linear conditions
    that put v inside M^2.
    """
    algebra = local_algebra(I)
    powers = maximal_ideal_powers(algebra)
    hilbert = tuple(_hilbert_from_powers(powers))
    if hilbert != SPECIAL_HILBERT:
        raise InvalidInputError(f"square_zero_exists needs H = {SPECIAL_HILBERT}, got {hilbert}")
    field_spec = I.ring.field
    m_indices = list(range(1, algebra.dimension))
    c_ring = PolyRing(field_spec, tuple(f"c{j}" for j in range(1, len(m_indices) + 1)))
    nc = c_ring.nvars
    two = field_spec.scalar(2)
    coefficients: list[dict[tuple[int, ...], object]] = [{} for _ in range(algebra.dimension)]
    for a, ja in enumerate(m_indices):
        for b in range(a, len(m_indices)):
            jb = m_indices[b]
            prod = algebra.product(algebra.unit_vector(ja), algebra.unit_vector(jb))
            exps = [0] * nc
            exps[a] += 1
            exps[b] += 1
            key = tuple(exps)
            for q, value in enumerate(prod):
                if value:
                    coefficients[q][key] = value if a == b else value * two
    quadrics = [c_ring.from_terms(terms) for terms in coefficients if terms]
    m2_rows = [[row[j] for j in m_indices] for row in powers[2]]
    functionals = linalg.nullspace(m2_rows, nc, algebra.domain)
    linear_forms = [c_ring.from_terms({tuple(int(j == k) for j in range(nc)): w[k] for k in range(nc)}) for w in functionals]
    cone = saturate(Ideal(c_ring, quadrics), Ideal(c_ring, linear_forms))
    return not cone.is_unit


# ── support splitting ────────────────────────────────────────


def _eliminant(algebra: QuotientAlgebra, k: int):
    """Monic generator of I ∩ k[x_k], as a polynomial in a one-variable ring."""
    ring = algebra.ring
    x = ring.gens[k]
    vectors = [algebra.coordinates(ring.one)]
    power = ring.one
    while True:
        power = power * x
        vectors.append(algebra.coordinates(power))
        kernel = linalg.nullspace(linalg.transpose(vectors), len(vectors), algebra.domain)
        if kernel:
            univariate = PolyRing(ring.field, (ring.variables[k],))
            return univariate.from_terms({(j,): c for j, c in enumerate(kernel[0])}).monic()


def _rational_roots(algebra: QuotientAlgebra, k: int) -> list:
    mu = _eliminant(algebra, k)
    domain = algebra.domain
    roots = []
    for factor, _ in mu.factor_list()[1]:
        if factor.degree() != 1:
            raise IrrationalSupportError(algebra.ring.variables[k])
        terms = dict(factor.iterterms())
        c1, c0 = terms[(1,)], terms.get((0,), domain.zero)
        roots.append(domain.quo(-c0, c1))
    return roots


def support_points(I: Ideal) -> list[tuple]:
    """Rational points of V(I), found from the roots of the univariate eliminants."""
    algebra = QuotientAlgebra(I)
    root_lists = [_rational_roots(algebra, k) for k in range(I.ring.nvars)]
    return [point for point in product(*root_lists) if all(not g(*point) for g in I.gens)]


def split_rational_support(I: Ideal) -> list[LocalPiece]:
    """One local component per support point, each translated to the origin.

    The component at P is I saturated by a polynomial h vanishing at every
    other support point but not at P; inside A this is the kernel of
    multiplication by a high power of h.
    """
    algebra = QuotientAlgebra(I)
    points = support_points(I)
    if len(points) == 1:
        return [LocalPiece(points[0], translate(I, points[0]))]
    ring = I.ring
    exponent = algebra.dimension - len(points) + 1
    pieces = []
    for P in points:
        h = ring.one
        for Q in points:
            if Q == P:
                continue
            k = next(i for i in range(ring.nvars) if Q[i] != P[i])
            h = h * (ring.gens[k] - ring.sympy.ground_new(Q[k]))
        killer = algebra.multiplication_matrix(h**exponent)
        kernel = linalg.nullspace(linalg.transpose(killer), algebra.dimension, algebra.domain)
        component = Ideal(ring, I.gens + tuple(algebra.element(v) for v in kernel))
        pieces.append(LocalPiece(P, translate(component, P)))
    total = sum(piece.degree for piece in pieces)
    if total != algebra.dimension:
        raise SupportNotAtOriginError(f"local degrees add up to {total}, expected {algebra.dimension}")
    return pieces


# ── classification ───────────────────────────────────────────


def classify_local(I: Ideal) -> Atom:
    algebra = local_algebra(I)
    d = algebra.dimension
    if d > MAX_CLASSIFIED_DEGREE:
        raise ClassificationRangeError(f"local degree {d} exceeds {MAX_CLASSIFIED_DEGREE}")
    hilbert = tuple(_hilbert_from_powers(maximal_ideal_powers(algebra)))
    socle = len(socle_basis(algebra))
    if socle != 1:
        raise NonGorensteinError(f"socle has dimension {socle}")
    if d == 1:
        return POINT
    if hilbert == SPECIAL_HILBERT:
        return Atom.special_atom(1 if square_zero_exists(I) else 2)
    for atom in realizable_atoms(d):
        if atom.hilbert == hilbert:
            return atom
    raise UnrealizableHilbertFunctionError(f"no Gorenstein algebra has H = {hilbert}")


def classify(I: Ideal) -> AlgebraLabel:
    """Isomorphism class of R/I as a direct sum of local Gorenstein atoms."""
    dimension = I.quotient_dimension
    if dimension == 0:
        raise InvalidInputError("the unit ideal has an empty quotient")
    if dimension > MAX_CLASSIFIED_DEGREE:
        raise ClassificationRangeError(f"degree {dimension} exceeds {MAX_CLASSIFIED_DEGREE}")
    atoms = []
    for piece in split_rational_support(I):
        atom = classify_local(piece.ideal)
        logger.debug(f"local piece at {[I.ring.field.to_python(c) for c in piece.point]}: {atom}")
        atoms.append(atom)
    return AlgebraLabel(tuple(atoms))


def analyze_local(I: Ideal) -> ArtinianReport:
    """Full report for an origin-local algebra; the label is set when one exists."""
    algebra = local_algebra(I)
    hilbert = _hilbert_from_powers(maximal_ideal_powers(algebra))
    socle = len(socle_basis(algebra))
    label = None
    if socle == 1 and algebra.dimension <= MAX_CLASSIFIED_DEGREE:
        try:
            label = str(AlgebraLabel.of(classify_local(I)))
        except UnrealizableHilbertFunctionError:
            label = None
    return ArtinianReport(
        dim=algebra.dimension,
        hilbert_fn=hilbert,
        level=len(hilbert) - 1,
        socle_dim=socle,
        gorenstein=socle == 1,
        label=label,
    )
