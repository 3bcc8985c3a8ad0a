# catalog/models.py
"""
Model ideals: the G-fat point I_{G_d}, local normal forms of every
Gorenstein atom, placed affine models of all labels, the projective
degree-6 models in P^4 and the catalog of the twenty degree-6 classes.
"""
from collections.abc import Sequence
from dataclasses import dataclass, field

from algebra.errors import InvalidInputError
from algebra.fields import FieldSpec
from algebra.ideals import (
    Ideal,
    graded_component_dim,
    groebner_equal,
    ideal_sum,
    intersect,
    quotient_by_element,
    translate,
)
from algebra.rings import Polynomial, PolyRing
from analysis.labels import AlgebraLabel, Atom, realizable_labels

CATALOG_DEGREE = 6


def projective_ring(field_spec: FieldSpec, n: int) -> PolyRing:
    """k[x0..xn], the coordinate ring of P^n."""
    return PolyRing(field_spec, tuple(f"x{i}" for i in range(n + 1)))


def affine_ring(field_spec: FieldSpec, n: int) -> PolyRing:
    """k[x1..xn], the chart x0 = 1 of P^n."""
    return PolyRing(field_spec, tuple(f"x{i}" for i in range(1, max(n, 1) + 1)))


# ── G-fat points ─────────────────────────────────────────────


def gfat(d: int, field_spec: FieldSpec | None = None, ring: PolyRing | None = None) -> Ideal:
    """I_{G_d} = (x_i x_j - delta_ij x_1^2), 1 <= i <= j <= d-2, in k[x0..x_{d-2}]."""
    if d < 4:
        raise InvalidInputError(f"gfat needs d >= 4, got {d}")
    ring = ring or projective_ring(field_spec or FieldSpec.prime(), d - 2)
    if ring.nvars < d - 1:
        raise InvalidInputError(f"gfat({d}) needs {d - 1} variables")
    x = ring.gens
    gens = []
    for i in range(1, d - 1):
        for j in range(i, d - 1):
            if i == j == 1:
                continue
            gens.append(x[i] * x[j] - (x[1] ** 2 if i == j else ring.zero))
    return Ideal(ring, gens)


def gfat_with_point(d: int, field_spec: FieldSpec | None = None) -> Ideal:
    """A G-fat point of degree d-1 plus one simple point, in P^(d-2).

    The last square relation carries the x0 term that splits off the point
    [1:0:...:0:1]; the shape is x_i x_j - delta_ij x_1^2 + x0 l_ij.
    """
    if d < 5:
        raise InvalidInputError(f"gfat_with_point needs d >= 5, got {d}")
    n = d - 2
    ring = projective_ring(field_spec or FieldSpec.prime(), n)
    x = ring.gens
    gens = [x[i] * x[j] for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    gens += [x[i] ** 2 - x[1] ** 2 for i in range(2, n)]
    gens.append(x[n] ** 2 - x[1] ** 2 - x[0] * x[n])
    return Ideal(ring, gens)


def is_gfat_shape(I: Ideal) -> bool:
    """x0 is regular and I reduces mod x0 to the G-fat ideal with dim I_2 = d(d-3)/2."""
    ring = I.ring
    d = ring.nvars + 1
    if d < 4 or not I.is_homogeneous:
        return False
    x0 = Ideal(ring, [ring.gens[0]])
    if quotient_by_element(I, ring.gens[0]) != I:
        return False
    if not groebner_equal(ideal_sum(I, x0), ideal_sum(gfat(d, ring=ring), x0)):
        return False
    return graded_component_dim(I, 2) == d * (d - 3) // 2


# ── local normal forms and placed models ─────────────────────


def local_generators(atom: Atom, ring: PolyRing) -> list[Polynomial]:
    """Generators of the normal form of an atom at the origin; unused variables vanish."""
    x = ring.gens
    if atom.n > ring.nvars:
        raise InvalidInputError(f"{atom} needs {atom.n} variables, ring has {ring.nvars}")
    if atom.special:
        x1, x2 = x[0], x[1]
        gens = [x2**2 if atom.special == 1 else x2**2 - x1**2, x1**3]
        used = 2
    else:
        n, d = atom.n, atom.d
        used = n
        gens = []
        if n:
            gens = [x[i] * x[j] for i in range(n) for j in range(i + 1, n)]
            gens += [x[i] ** 2 - x[0] ** (d - n) for i in range(1, n)]
            gens.append(x[0] ** (d - n + 1))
    gens += list(x[used:])
    return gens


def default_placement(count: int, nvars: int) -> list[tuple[int, ...]]:
    """Origin, then e1..en, then 2e1..2en and so on."""
    points = [(0,) * nvars]
    k = 1
    while len(points) < count:
        for i in range(nvars):
            points.append(tuple(k if j == i else 0 for j in range(nvars)))
            if len(points) == count:
                break
        k += 1
    return points


def model_ideal(
    label: AlgebraLabel,
    field_spec: FieldSpec | None = None,
    ring: PolyRing | None = None,
    placement: Sequence[Sequence[object]] | None = None,
) -> Ideal:
    """Intersection of translated local normal forms, one summand per placement point."""
    if ring is None:
        needed = max(2 if a.special else a.n for a in label.summands)
        ring = affine_ring(field_spec or FieldSpec.prime(), needed)
    summands = label.summands
    if placement is None:
        placement = default_placement(len(summands), ring.nvars)
    if len(placement) != len(summands):
        raise InvalidInputError(f"{len(summands)} summands but {len(placement)} placement points")
    scalars = [tuple(ring.field.scalar(c) for c in p) for p in placement]
    if len(set(scalars)) != len(scalars):
        raise InvalidInputError("placement points must be distinct")
    result: Ideal | None = None
    for atom, point in zip(summands, scalars):
        local = Ideal(ring, local_generators(atom, ring))
        piece = translate(local, [-c for c in point])
        result = piece if result is None else intersect(result, piece)
    return result


# ── projective degree-6 models in P^4 ────────────────────────

LOCAL_MODELS_P4: dict[str, list[str]] = {
    "A1,6": [
        "x1*x2 - x0*x3", "x1*x3 - x0*x4", "x1*x4 - x2*x3", "x2*x4", "x3*x4",
        "x1^2 - x0*x2", "x2^2 - x0*x4", "x3^2", "x4^2",
    ],
    "A2,6": [
        "x1*x2 - x0*x3", "x1*x3 - x4^2", "x1*x4", "x2*x3", "x2*x4", "x3*x4",
        "x1^2 - x0*x2", "x2^2 - x4^2", "x3^2",
    ],
    "A3,6": [
        "x1*x2 - x4^2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4",
        "x1^2 - x0*x2", "x2^2", "x3^2 - x4^2",
    ],
    "A1sp": [
        "x1*x2", "x1*x3 - x0*x4", "x1*x4 - x2*x3", "x2*x4", "x3*x4",
        "x1^2 - x0*x2", "x2^2", "x3^2", "x4^2",
    ],
    "A2sp": [
        "x1*x2", "x1*x3 - x0*x4", "x1*x4 - x2*x3", "x2*x4", "x3*x4",
        "x1^2 - x0*x2", "x2^2", "x3^2 - x0*x2", "x4^2",
    ],
}  # fmt: skip

REDUCIBLE_MODELS_P4: dict[str, list[str]] = {
    "A3,5 + A0,1": [
        "x0*x1", "x0*x2", "x0*x3", "x1*x2", "x1*x3", "x2*x3",
        "x1^2 - x0*x4", "x2^2 - x0*x4", "x3^2 - x0*x4",
    ],
    "A2,5 + A0,1": [
        "x1*x2", "x1*x3 - x0*x4", "x1*x4", "x2*x3", "x2*x4", "x3*x4",
        "x1^2 - x0*x3", "x2^2 - x0*x4", "x3^2",
    ],
    "A1,5 + A0,1": [
        "x1*x2 - x0*x3", "x1*x3 - x0*x4", "x1*x4", "x2*x3", "x2*x4", "x3*x4",
        "x1^2 - x0*x2", "x2^2 - x0*x4", "x3^2",
    ],
}  # fmt: skip

AFFINE_CI_MODELS: dict[str, list[str]] = {
    "A1,6": ["x1^2 - x2", "x1^3 - x3", "x1^4 - x4", "x1^6"],
    "A2,6": ["x1^2 - x2", "x1^3 - x3", "x1^4 - x2^2", "x1*x4"],
    "A1sp": ["x1^2 - x2", "x1*x3 - x4", "x3^2", "x1^3"],
    "A2sp": ["x1^2 - x2", "x1*x3 - x4", "x1^2 - x3^2", "x1^3"],
    "A3,6": ["x1^2 - x2", "x1*x3", "x1*x4", "x3*x4", "x3^2 - x4^2", "x1*x2 - x4^2"],
}


def local_models(field_spec: FieldSpec | None = None) -> dict[AlgebraLabel, Ideal]:
    """The six local degree-6 Gorenstein models as nondegenerate schemes in P^4."""
    field_spec = field_spec or FieldSpec.prime()
    ring = projective_ring(field_spec, 4)
    models = {AlgebraLabel.parse(k): Ideal.parse(ring, v) for k, v in LOCAL_MODELS_P4.items()}
    models[AlgebraLabel.parse("A4,6")] = gfat(CATALOG_DEGREE, ring=ring)
    return dict(sorted(models.items(), key=lambda kv: str(kv[0])))


def reducible_models(field_spec: FieldSpec | None = None) -> dict[AlgebraLabel, Ideal]:
    ring = projective_ring(field_spec or FieldSpec.prime(), 4)
    return {AlgebraLabel.parse(k): Ideal.parse(ring, v) for k, v in REDUCIBLE_MODELS_P4.items()}


def affine_ci_models(field_spec: FieldSpec | None = None) -> dict[AlgebraLabel, Ideal]:
    """Affine ideals in k[x1..x4] of the chart x0 = 1 of the local P^4 models."""
    ring = affine_ring(field_spec or FieldSpec.prime(), 4)
    return {AlgebraLabel.parse(k): Ideal.parse(ring, v) for k, v in AFFINE_CI_MODELS.items()}


# ── the catalog ──────────────────────────────────────────────


@dataclass(frozen=True)
class CatalogEntry:
    label: AlgebraLabel
    affine_model: Ideal
    projective_model: Ideal | None = None
    hilbert: tuple[int, ...] = field(default=())

    @property
    def name(self) -> str:
        return str(self.label)


def build_catalog(field_spec: FieldSpec | None = None) -> tuple[CatalogEntry, ...]:
    """One entry per realizable degree-6 label, with P^4 models where known."""
    field_spec = field_spec or FieldSpec.prime()
    projective = {**local_models(field_spec), **reducible_models(field_spec)}
    entries = []
    for label in realizable_labels(CATALOG_DEGREE):
        local = label.summands[0].hilbert if label.is_local else ()
        entries.append(
            CatalogEntry(
                label=label,
                affine_model=model_ideal(label, field_spec),
                projective_model=projective.get(label),
                hilbert=local,
            )
        )
    return tuple(entries)


def point_on_scheme(I: Ideal, point: Sequence[object]) -> bool:
    ring = I.ring
    values = [ring.field.scalar(c) for c in point]
    return all(not g(*values) for g in I.gens)

