# catalog/families.py
"""
One-parameter degenerations: ideals over k[b, x...] whose fiber at b = 0 is
a local Gorenstein algebra and whose fiber at b = 1 splits off points.
"""
from dataclasses import dataclass, field

from algebra.fields import FieldSpec
from algebra.ideals import Ideal
from algebra.rings import Polynomial, PolyRing, substitute
from analysis.artinian import classify
from analysis.geometry import classify_scheme
from analysis.labels import AlgebraLabel

PARAMETER = "b"


@dataclass(frozen=True)
class FamilySpec:
    name: str
    ring: PolyRing
    generators: tuple[Polynomial, ...]
    expected: dict[int, AlgebraLabel]
    projective: bool = False
    needs_i: frozenset[int] = field(default_factory=frozenset)

    @property
    def fiber_ring(self) -> PolyRing:
        return self.ring.without(PARAMETER)


def family_fiber(family: FamilySpec, b0) -> Ideal:
    """The fiber ideal at b = b0, in the ring without the parameter."""
    target = family.fiber_ring
    value = target.constant(b0) if not isinstance(b0, Polynomial) else b0
    return Ideal(target, [substitute(g, family.ring, {PARAMETER: value}, target=target) for g in family.generators])


def classify_fiber(family: FamilySpec, b0) -> AlgebraLabel:
    fiber = family_fiber(family, b0)
    return classify_scheme(fiber) if family.projective else classify(fiber)


def _points_on_a_line(ring: PolyRing) -> Polynomial:
    """prod_{h=0..5} (x1 - h b): six points collapsing to the origin as b -> 0."""
    x, b = ring.var("x1"), ring.var(PARAMETER)
    f = ring.one
    for h in range(6):
        f *= x - b * h
    return f


def _family(name, field_spec, variables, texts, expected, projective=False, needs_i=()) -> FamilySpec:
    ring = PolyRing(field_spec, (PARAMETER, *variables))
    return FamilySpec(
        name=name,
        ring=ring,
        generators=tuple(ring.parse(t) if isinstance(t, str) else t(ring) for t in texts),
        expected={b: AlgebraLabel.parse(text) for b, text in expected.items()},
        projective=projective,
        needs_i=frozenset(needs_i),
    )


def degeneration_families(field_spec: FieldSpec | None = None) -> list[FamilySpec]:
    field_spec = field_spec or FieldSpec.prime()
    plane = ("x1", "x2")
    return [
        _family(
            "a24-two-points",
            field_spec,
            plane,
            ["x2^2 - x1^2 - x2^4 + b*x1^6", "x1^3 - b*x1^7", "x1*x2", "b*x2"],
            {0: "A2,4 + A0,1^2", 1: "A1,2 + A0,1^4"},
            needs_i={1},
        ),
        _family(
            "a16-on-a-line",
            field_spec,
            ("x1",),
            [_points_on_a_line],
            {0: "A1,6", 1: "A0,1^6"},
        ),
        _family(
            "a26-to-a24-two-points",
            field_spec,
            plane,
            ["x1*x2", "x1^4 + b^2*x1^2 - x2^2", "x2^3"],
            {0: "A2,6", 1: "A2,4 + A0,1^2"},
            needs_i={1},
        ),
        _family(
            "a26-to-a24-a12",
            field_spec,
            plane,
            ["x1*x2", "x1^4 + 2*b*x1^3 + b^2*x1^2 - x2^2", "x2^3"],
            {0: "A2,6", 1: "A2,4 + A1,2"},
        ),
        _family(
            "a26-to-a25-point",
            field_spec,
            plane,
            ["x1*x2", "x2^2 - b*x1^3 + x1^4"],
            {0: "A2,6", 1: "A2,5 + A0,1"},
        ),
        _family(
            "a36-to-a35-point",
            field_spec,
            ("x1", "x2", "x3"),
            ["x1*x2", "x1*x3", "x2*x3", "x2^2 - x3^2", "x3^2 - b*x1^2 - x1^3"],
            {0: "A3,6", 1: "A3,5 + A0,1"},
        ),
        _family(
            "gfat-to-a35-point",
            field_spec,
            ("x0", "x1", "x2", "x3", "x4"),
            [
                "x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4",
                "x2^2 - x1^2", "x3^2 - x1^2", "x4^2 - x1^2 - b*x0*x4",
            ],  # fmt: skip
            {0: "A4,6", 1: "A3,5 + A0,1"},
            projective=True,
        ),
    ]
