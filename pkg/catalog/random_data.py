# catalog/random_data.py
"""Seeded random inputs for the constructions and the property checks."""
import random
from collections.abc import Sequence

from algebra.fields import FieldSpec
from algebra.rings import Polynomial, PolyRing


def linear_form(ring: PolyRing, rng: random.Random, variables: Sequence[str] | None = None) -> Polynomial:
    """A nonzero random linear form in the given variables (all by default)."""
    names = list(variables) if variables is not None else list(ring.variables)
    while True:
        form = ring.zero
        for name in names:
            form += ring.var(name) * ring.field.random_scalar(rng)
        if form:
            return form


def linear_matrix(ring: PolyRing, rows: int, cols: int, rng: random.Random) -> list[list[Polynomial]]:
    return [[linear_form(ring, rng) for _ in range(cols)] for _ in range(rows)]


def linear_cube(ring: PolyRing, rng: random.Random) -> list[list[list[Polynomial]]]:
    """A 2x2x2 array of linear forms, indexed T[a][b][c]."""
    return [[[linear_form(ring, rng) for _ in range(2)] for _ in range(2)] for _ in range(2)]


def antisymmetric_matrix(ring: PolyRing, n: int, rng: random.Random) -> list[list[Polynomial]]:
    M = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            M[i][j] = linear_form(ring, rng)
            M[j][i] = -M[i][j]
    return M


def symmetric_matrix(ring: PolyRing, n: int, rng: random.Random) -> list[list[Polynomial]]:
    M = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = linear_form(ring, rng)
    return M


def tom_ready_matrix(ring: PolyRing, rng: random.Random) -> list[list[Polynomial]]:
    """A 3x3 matrix whose lower-right 2x2 block avoids x0, as the Tom format requires."""
    M = linear_matrix(ring, 3, 3, rng)
    rest = ring.variables[1:]
    for i in (1, 2):
        for j in (1, 2):
            M[i][j] = linear_form(ring, rng, rest)
    return M


def affine_points(field_spec: FieldSpec, n: int, count: int, rng: random.Random) -> list[tuple]:
    """Distinct random points of the chart x0 = 1 in P^n, as projective coordinates."""
    points: list[tuple] = []
    seen = set()
    while len(points) < count:
        p = (field_spec.domain.one,) + tuple(field_spec.random_scalar(rng) for _ in range(n))
        if p not in seen:
            seen.add(p)
            points.append(p)
    return points



def random_polynomial(
    ring: PolyRing, rng: random.Random, degree: int = 2, terms: int = 4, constant: bool = True
) -> Polynomial:
    """A random polynomial of total degree at most `degree` with up to `terms` terms.

    With constant=False the constant term is never drawn, so the origin lies on its zero set.
    """
    low = 0 if constant else 1
    f = ring.zero
    for _ in range(terms):
        total = rng.randint(low, degree)
        exps = [0] * ring.nvars
        for _ in range(total):
            exps[rng.randrange(ring.nvars)] += 1
        f += ring.monomial(exps, ring.field.random_scalar(rng, nonzero=True))
    return f
