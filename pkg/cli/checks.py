# cli/checks.py
"""
The verify-paper registry: one named check per acceptance criterion plus the
property suites. Every check is a pure function of the field and seed.
"""
import random
from collections.abc import Callable

from algebra.ideals import (
    Ideal,
    change_coordinates,
    colon,
    coordinate_ideal,
    graded_component_dim,
    groebner_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    saturate,
    translate,
)
from algebra.linalg import inverse, random_invertible
from algebra.orders import MonomialOrderSpec
from algebra.rings import PolyRing, linear_change, substitute
from analysis import geometry
from analysis.artinian import classify, psi_form_ranks, socle_dim, split_rational_support
from analysis.labels import AlgebraLabel, realizable_labels
from catalog import constructions, random_data
from catalog.families import classify_fiber, degeneration_families
from catalog.models import (
    affine_ci_models,
    affine_ring,
    build_catalog,
    gfat,
    gfat_with_point,
    is_gfat_shape,
    local_models,
    projective_ring,
    reducible_models,
)
from services.verify_runner import Check, CheckContext, CheckOutcome

CHECKS: dict[str, Check] = {}

SEEDED_INSTANCES = 3
CLASSIFICATION_TRIALS = 5


def check(name: str, description: str = "", needs_i: bool = False):
    def register(func: Callable[[CheckContext], CheckOutcome]):
        CHECKS[name] = Check(name, func, description, needs_i)
        return func

    return register


def _all(results: dict[str, object], expected: dict[str, object]) -> CheckOutcome:
    return CheckOutcome(results == expected, results, expected)


# ── tangent spaces ───────────────────────────────────────────


@check("tangent-g6", "tangent space of the G-fat point of degree 6")
def tangent_g6(ctx: CheckContext) -> CheckOutcome:
    return CheckOutcome.equal(geometry.tangent_dim(gfat(6, ctx.field_spec), ctx.seed), 29)


@check("tangent-g5", "G_5 is unobstructed: 15 = 5*3")
def tangent_g5(ctx: CheckContext) -> CheckOutcome:
    return CheckOutcome.equal(geometry.tangent_dim(gfat(5, ctx.field_spec), ctx.seed), 15)


@check("tangent-g7", "G_7 is obstructed: 49 > 35")
def tangent_g7(ctx: CheckContext) -> CheckOutcome:
    value = geometry.tangent_dim(gfat(7, ctx.field_spec), ctx.seed)
    return CheckOutcome(value == 49 and value > 7 * 5, value, 49)


@check("tangent-ci-models", "complete-intersection local models have a 24-dimensional tangent space")
def tangent_ci_models(ctx: CheckContext) -> CheckOutcome:
    models = local_models(ctx.field_spec)
    wanted = ["A1,6", "A2,6", "A1sp", "A2sp"]
    observed = {w: geometry.tangent_dim(models[AlgebraLabel.parse(w)], ctx.seed) for w in wanted}
    return _all(observed, {w: 24 for w in wanted})


@check("tangent-a36", "A3,6 model: dim A/I^2 <= 30 and tangent dimension 24")
def tangent_a36(ctx: CheckContext) -> CheckOutcome:
    Ia = affine_ci_models(ctx.field_spec)[AlgebraLabel.parse("A3,6")]
    square = ideal_power(Ia, 2).quotient_dimension
    tangent = geometry.affine_tangent_dim(Ia)
    return CheckOutcome(square <= 30 and tangent == 24, (square, tangent), "(<= 30, 24)")


@check("tangent-dual-path", "two tangent computations agree")
def tangent_dual_path(ctx: CheckContext) -> CheckOutcome:
    g6 = gfat(6, ctx.field_spec)
    a16 = local_models(ctx.field_spec)[AlgebraLabel.parse("A1,6")]
    observed = [geometry.tangent_dim_direct(I, ctx.seed) for I in (g6, a16)]
    expected = [geometry.tangent_dim(I, ctx.seed) for I in (g6, a16)]
    return CheckOutcome.equal(observed, expected)


@check("obstructed-d7", "G_6 plus a point in P^5: 40 = 29 + 2*7 - 3")
def obstructed_d7(ctx: CheckContext) -> CheckOutcome:
    value = geometry.tangent_dim(gfat_with_point(7, ctx.field_spec), ctx.seed)
    return CheckOutcome(value == 40 and value > 35, value, 40)


# ── projective models ────────────────────────────────────────


@check("local-models", "the six local models in P^4: aG, degree 6, nondegenerate, h = (1,5,6,6), labels")
def local_models_check(ctx: CheckContext) -> CheckOutcome:
    observed, expected = {}, {}
    for label, I in local_models(ctx.field_spec).items():
        observed[str(label)] = (
            geometry.is_aG(I, ctx.seed),
            geometry.degree(I),
            geometry.span_codim(I),
            tuple(geometry.hilbert_function(I, 3)),
            str(geometry.classify_scheme(I, ctx.seed)),
        )
        expected[str(label)] = (True, 6, 0, (1, 5, 6, 6), str(label))
    return _all(observed, expected)


@check("betti-low-degrees", "beta_1 = 9 and the linear strand beta_2 = 16 on G_6 and the local models")
def betti_low_degrees(ctx: CheckContext) -> CheckOutcome:
    expected_table = tuple(geometry.betti_expected(6, h) for h in (1, 2, 3))
    observed = {str(label): geometry.betti_check_low_degrees(I, ctx.seed) for label, I in local_models(ctx.field_spec).items()}
    expected = {name: expected_table[:2] for name in observed}
    return CheckOutcome(observed == expected and expected_table == (9, 16, 9), observed, expected)


@check("catalog-classification", "20 classes; each affine model and 5 coordinate changes classify correctly")
def catalog_classification(ctx: CheckContext) -> CheckOutcome:
    entries = build_catalog(ctx.field_spec)
    rng = random.Random(ctx.seed)
    wrong = []
    for entry in entries:
        ring = entry.affine_model.ring
        candidates = [entry.affine_model]
        for _ in range(CLASSIFICATION_TRIALS):
            M = random_invertible(ring.field, ring.nvars, rng)
            candidates.append(Ideal(ring, linear_change(entry.affine_model.gens, ring, M)))
        for I in candidates:
            if classify(I) != entry.label:
                wrong.append(str(entry.label))
                break
    return CheckOutcome(len(entries) == 20 and not wrong, (len(entries), wrong), (20, []))


@check("reducible-models", "reducible P^4 models: aG, degree 6, labels")
def reducible(ctx: CheckContext) -> CheckOutcome:
    observed, expected = {}, {}
    for label, I in reducible_models(ctx.field_spec).items():
        observed[str(label)] = (geometry.is_aG(I, ctx.seed), geometry.degree(I), str(geometry.classify_scheme(I, ctx.seed)))
        expected[str(label)] = (True, 6, str(label))
    return _all(observed, expected)


@check("projection-d7", "projecting G_6 plus a point from the point gives G_6")
def projection_d7(ctx: CheckContext) -> CheckOutcome:
    X = gfat_with_point(7, ctx.field_spec)
    image = geometry.project_from_point(X, [1, 0, 0, 0, 0, 1], ctx.seed)
    return CheckOutcome.equal(str(geometry.classify_scheme(image, ctx.seed)), "A4,6")


@check("gfat-shape", "G_d and G_d plus a point reduce mod x0 to G_d with d(d-3)/2 quadrics")
def gfat_shape(ctx: CheckContext) -> CheckOutcome:
    observed = {}
    for d in (5, 6):
        observed[f"G{d}"] = is_gfat_shape(gfat(d, ctx.field_spec))
        observed[f"G{d - 1}+P"] = is_gfat_shape(gfat_with_point(d, ctx.field_spec))
    return _all(observed, {name: True for name in observed})


# ── constructions ────────────────────────────────────────────


@check("scandinavian-g6", "2x2 minors of the explicit matrix give G_6", needs_i=True)
def scandinavian_g6(ctx: CheckContext) -> CheckOutcome:
    ring = projective_ring(ctx.field_spec, 4)
    result = constructions.scandinavian(constructions.scandinavian_g6_matrix(ring), ring)
    return CheckOutcome.equal(groebner_equal(result.ideal, gfat(6, ring=ring)), True)


@check("anglo-american-g6", "face determinants of the explicit array give G_6", needs_i=True)
def anglo_american_g6(ctx: CheckContext) -> CheckOutcome:
    ring = projective_ring(ctx.field_spec, 4)
    result = constructions.anglo_american(constructions.anglo_american_g6_cube(ring), ring)
    return CheckOutcome.equal(groebner_equal(result.ideal, gfat(6, ring=ring)), True)


@check("determinantal-random", "seeded scandinavian and anglo-american outputs are aG of degree 6 with 9 quadrics")
def determinantal_random(ctx: CheckContext) -> CheckOutcome:
    ring = projective_ring(ctx.field_spec, 4)
    rng = random.Random(ctx.seed)
    observed = []
    for _ in range(SEEDED_INSTANCES):
        for result in (
            constructions.scandinavian(random_data.linear_matrix(ring, 3, 3, rng), ring),
            constructions.anglo_american(random_data.linear_cube(ring, rng), ring),
        ):
            if result.zero_dimensional:
                I = result.ideal
                observed.append((geometry.is_aG(I, ctx.seed), geometry.degree(I), graded_component_dim(I, 2)))
    return CheckOutcome(bool(observed) and all(o == (True, 6, 9) for o in observed), observed, "(True, 6, 9) each")


@check("british-span", "fifteen pfaffians span nine quadrics; zero-dimensional outputs are aG of degree 6")
def british_span(ctx: CheckContext) -> CheckOutcome:
    ring = projective_ring(ctx.field_spec, 4)
    rng = random.Random(ctx.seed)
    spans, verdicts = [], []
    for _ in range(SEEDED_INSTANCES):
        A = random_data.antisymmetric_matrix(ring, 3, rng)
        S = random_data.symmetric_matrix(ring, 3, rng)
        result = constructions.british(A, S, 1, ring)
        spans.append(graded_component_dim(result.ideal, 2))
        if result.zero_dimensional:
            verdicts.append(geometry.is_aG(result.ideal, ctx.seed) and geometry.degree(result.ideal) == 6)
    return CheckOutcome(spans == [9] * SEEDED_INSTANCES and all(verdicts), (spans, verdicts), [9] * SEEDED_INSTANCES)


@check("anglo-hellenic", "unprojection reproduces the stated ideals and the Tom-format scandinavian schemes")
def anglo_hellenic(ctx: CheckContext) -> CheckOutcome:
    ring = projective_ring(ctx.field_spec, 4)
    targets = {**reducible_models(ctx.field_spec), **local_models(ctx.field_spec)}
    observed = {}
    for name in constructions.ANGLO_HELLENIC_DATA:
        I = constructions.anglo_hellenic_reference(name, ring)
        observed[name] = groebner_equal(I, targets[AlgebraLabel.parse(name)])
    rng = random.Random(ctx.seed)
    for k in range(SEEDED_INSTANCES):
        M = random_data.tom_ready_matrix(ring, rng)
        A, s = constructions.tom_format(M, ring)
        observed[f"tom-{k}"] = groebner_equal(constructions.anglo_hellenic(A, s, ring), constructions.scandinavian(M, ring).ideal)
    return _all(observed, {name: True for name in observed})


@check("italian", "adding a point to degree-5 schemes: f by colon, aG degree 6, labels")
def italian(ctx: CheckContext) -> CheckOutcome:
    ring4 = projective_ring(ctx.field_spec, 3)
    ring5 = projective_ring(ctx.field_spec, 4)
    g = -ring5.gens[4]
    observed, expected = {}, {}
    for name, (gens, f_text) in constructions.ITALIAN_DATA.items():
        I5 = Ideal.parse(ring4, gens)
        f = constructions.italian_quadric(I5)
        same_f = groebner_equal(ideal_sum(I5, Ideal(ring4, [f])), ideal_sum(I5, Ideal.parse(ring4, [f_text])))
        X = constructions.italian(I5, g, ring5)
        observed[name] = (same_f, str(geometry.classify_scheme(X, ctx.seed)))
        expected[name] = (True, name)
    return _all(observed, expected)


@check("italian-general-points", "P and four general points, lifted with two points on the x4 line, give six points")
def italian_general(ctx: CheckContext) -> CheckOutcome:
    I5, g, ring5 = italian_general_input(ctx)
    X = constructions.italian(I5, g, ring5)
    return CheckOutcome.equal(str(geometry.classify_scheme(X, ctx.seed)), "A0,1^6")


def italian_general_input(ctx: CheckContext):
    """Four random points and P in P^3, and g splitting the residual quadric on the x4 line rationally."""
    rng = random.Random(ctx.seed)
    field_spec = ctx.field_spec
    ring4 = projective_ring(field_spec, 3)
    ring5 = projective_ring(field_spec, 4)
    origin = (field_spec.domain.one,) + (field_spec.domain.zero,) * 3
    points = [origin] + random_data.affine_points(field_spec, 3, 4, rng)
    I5 = geometry.points_ideal(ring4, points)
    f = constructions.italian_quadric(I5)
    c = f(*origin)
    alpha, beta = field_spec.scalar(2), field_spec.scalar(3)
    x = ring5.gens
    g = x[0] * (-c * (alpha + beta)) + x[4] * (c * alpha * beta)
    g += sum((x[k] * field_spec.random_scalar(rng) for k in (1, 2, 3)), ring5.zero)
    return I5, g, ring5


@check("japanese", "plane conic-cubic data give the stated reducible and special classes")
def japanese(ctx: CheckContext) -> CheckOutcome:
    plane = projective_ring(ctx.field_spec, 2)
    observed = {}
    for name, (C, F) in constructions.JAPANESE_DATA.items():
        X = constructions.japanese(plane.parse(C), plane.parse(F), plane)
        observed[name] = str(geometry.classify_scheme(X, ctx.seed))
    return _all(observed, {name: name for name in constructions.JAPANESE_DATA})


# ── families ─────────────────────────────────────────────────


@check("families", "degeneration families classify as stated at b = 0 and b = 1")
def families(ctx: CheckContext) -> CheckOutcome:
    has_i = ctx.field_spec.sqrt_minus_one() is not None
    observed, expected = {}, {}
    for family in degeneration_families(ctx.field_spec):
        for b, label in family.expected.items():
            if b in family.needs_i and not has_i:
                continue
            key = f"{family.name}@{b}"
            observed[key] = str(classify_fiber(family, b))
            expected[key] = str(label)
    return _all(observed, expected)


# ── general points ───────────────────────────────────────────


@check("general-cubics", "six general points in P^4: dim I_3 = 29 > 24")
def general_cubics(ctx: CheckContext) -> CheckOutcome:
    rng = random.Random(ctx.seed)
    ring = projective_ring(ctx.field_spec, 4)
    I = geometry.points_ideal(ring, random_data.affine_points(ctx.field_spec, 4, 6, rng))
    value = graded_component_dim(I, 3)
    return CheckOutcome(value == 29 and value > 6 * 4, value, 29)


@check("general-points-ag", "general points are aG exactly when n = d - 2")
def general_points_ag(ctx: CheckContext) -> CheckOutcome:
    rng = random.Random(ctx.seed)
    observed, expected = {}, {}
    for n, d in ((2, 4), (3, 5), (4, 6), (3, 4), (4, 5)):
        ring = projective_ring(ctx.field_spec, n)
        I = geometry.points_ideal(ring, random_data.affine_points(ctx.field_spec, n, d, rng))
        reduction = geometry.artinian_reduction(I, ctx.seed)
        observed[f"n={n},d={d}"] = (reduction.gorenstein, reduction.symmetric)
        expected[f"n={n},d={d}"] = (n == d - 2, n == d - 2)
    return _all(observed, expected)


# ── property suites ──────────────────────────────────────────


@check("property-groebner", "reduced bases are canonical and membership agrees with generators")
def property_groebner(ctx: CheckContext) -> CheckOutcome:
    g6 = gfat(6, ctx.field_spec)
    rng = random.Random(ctx.seed)
    ring = g6.ring
    shuffled = list(g6.gens)
    rng.shuffle(shuffled)
    combos = [shuffled[0] + shuffled[1] * ctx.field_spec.scalar(3)] + shuffled[1:]
    same = groebner_equal(g6, Ideal(ring, combos))
    members = all(g6.contains(g * ring.gens[0]) for g in g6.gens)
    return CheckOutcome(same and members, (same, members), (True, True))


@check("property-ring", "ring axioms, monomial orders respect products, ring maps and inverse coordinate changes")
def property_ring(ctx: CheckContext) -> CheckOutcome:
    rng = random.Random(ctx.seed)
    ring = PolyRing(ctx.field_spec, ("x", "y", "z"))
    failed = []
    for trial in range(SEEDED_INSTANCES):
        f, g, h, a = (random_data.random_polynomial(ring, rng, degree=3, terms=5) for _ in range(4))
        if not (f * (g + h) == f * g + f * h and (f * g) * h == f * (g * h) and f + g == g + f):
            failed.append(f"axioms/{trial}")
        assignment = {"x": a, "z": h}
        image = [substitute(p, ring, assignment) for p in (f, g, f * g, f + g)]
        if image[2] != image[0] * image[1] or image[3] != image[0] + image[1]:
            failed.append(f"substitute/{trial}")
        M = random_invertible(ctx.field_spec, ring.nvars, rng)
        moved = linear_change([f, g], ring, M)
        if linear_change(moved, ring, inverse(M, ctx.field_spec.domain)) != [f, g]:
            failed.append(f"linear-change/{trial}")
    for order in ("grevlex", "lex", "grlex", "elim(1)", "elim(2)"):
        key = ring.with_order(MonomialOrderSpec.parse(order)).sympy.order
        for _ in range(20):
            u, v, w = (tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(3))
            if key(u) < key(v) and not key(tuple(map(sum, zip(u, w)))) < key(tuple(map(sum, zip(v, w)))):
                failed.append(f"order/{order}")
                break
    return CheckOutcome.equal(failed, [])


@check("property-ideals", "IJ in I meet J, (I : J) J in I, sums commute; seeded saturation, colon and meet")
def property_ideals(ctx: CheckContext) -> CheckOutcome:
    ring = projective_ring(ctx.field_spec, 2)
    I = Ideal.parse(ring, ["x1*x2", "x0*x1^2 - x0*x2^2"])
    J = Ideal.parse(ring, ["x1", "x2^2"])
    fixed = (
        intersect(I, J).contains_ideal(ideal_product(I, J)),
        I.contains_ideal(ideal_product(colon(I, J), J)),
        groebner_equal(ideal_sum(I, J), ideal_sum(J, I)),
    )
    rng = random.Random(ctx.seed)
    plane = PolyRing(ctx.field_spec, ("x", "y"))
    origin = coordinate_ideal(plane, ["x", "y"])

    def random_ideal() -> Ideal:
        return Ideal(plane, [random_data.random_polynomial(plane, rng, degree=3, terms=3, constant=False) for _ in range(2)])

    seeded = []
    for _ in range(SEEDED_INSTANCES):
        A, B = random_ideal(), random_ideal()
        once = saturate(A, origin)
        meet = intersect(A, B)
        seeded.append(
            groebner_equal(saturate(once, origin), once)
            and colon(A, B).contains_ideal(A)
            and A.contains_ideal(meet)
            and ideal_sum(A, B).contains_ideal(A)
        )
    results = (*fixed, all(seeded))
    return CheckOutcome(all(results), results, (True,) * 4)


@check("property-artinian", "classification ignores translation; split pieces reassemble; pairings detect Gorenstein")
def property_artinian(ctx: CheckContext) -> CheckOutcome:
    rng = random.Random(ctx.seed)
    failed = []
    for entry in build_catalog(ctx.field_spec):
        model = entry.affine_model
        ring = model.ring
        shift = [ring.field.random_scalar(rng) for _ in range(ring.nvars)]
        if classify(translate(model, shift)) != entry.label:
            failed.append(f"translate/{entry.name}")
        if not entry.label.is_local:
            whole = None
            for piece in split_rational_support(model):
                back = translate(piece.ideal, [-c for c in piece.point])
                whole = back if whole is None else intersect(whole, back)
            if not groebner_equal(whole, model):
                failed.append(f"split/{entry.name}")
        elif model.is_homogeneous and not all(f.nondegenerate for f in psi_form_ranks(model)):
            failed.append(f"pairing/{entry.name}")
    plane = affine_ring(ctx.field_spec, 2)
    square = Ideal.parse(plane, ["x1^2", "x1*x2", "x2^2"])
    if socle_dim(square) == 1 or all(f.nondegenerate for f in psi_form_ranks(square)):
        failed.append("pairing/(x1,x2)^2")
    return CheckOutcome.equal(failed, [])


@check("property-geometry", "tangent dimension ignores coordinates; degree-5 Betti numbers; projection drops the point")
def property_geometry(ctx: CheckContext) -> CheckOutcome:
    rng = random.Random(ctx.seed)
    fp = ctx.field_spec
    a1sp = local_models(fp)[AlgebraLabel.parse("A1sp")]
    tangents = []
    for I in (gfat(6, fp), a1sp):
        M = random_invertible(fp, I.ring.nvars, rng)
        tangents.append(geometry.tangent_dim(change_coordinates(I, M), ctx.seed))
    betti = [geometry.betti_check_low_degrees(build(5, fp), ctx.seed) for build in (gfat, gfat_with_point)]
    projected = {}
    for label, X in reducible_models(fp).items():
        image = geometry.project_from_point(X, [0, 0, 0, 0, 1], ctx.seed)
        projected[str(label)] = str(geometry.classify_scheme(image, ctx.seed))
    observed = (tangents, betti, projected)
    expected = ([29, 24], [(5, 5), (5, 5)], {str(label): str(label.without_point()) for label in reducible_models(fp)})
    return CheckOutcome(observed == expected, observed, expected)


@check("property-labels", "twenty Gorenstein labels in degree 6")
def property_labels(ctx: CheckContext) -> CheckOutcome:
    return CheckOutcome.equal(len(realizable_labels(6)), 20)
