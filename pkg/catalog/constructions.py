# catalog/constructions.py
"""
The six named constructions of degree-6 arithmetically Gorenstein schemes.

scandinavian: 2x2 minors of a 3x3 matrix of linear forms
anglo_american: face determinants of a 2x2x2 array
british: order-4 pfaffians of an extrasymmetric 6x6 matrix
japanese: a plane conic-cubic intersection through the Veronese surface
italian: adding a point to a degree-5 scheme in a hyperplane
anglo_hellenic: Kustin-Miller unprojection of a pfaffian scheme
"""
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations

from loguru import logger

from algebra.errors import (
    ConstructionError,
    ExactDivisionError,
    InvalidInputError,
    NotArithmeticallyGorensteinError,
    NotZeroDimensionalError,
    ShapeError,
)
from algebra.groebner import normal_form
from algebra.ideals import Ideal, colon, coordinate_ideal, ring_map_kernel
from algebra.rings import Polynomial, PolyRing, is_homogeneous, linear_change, substitute, total_degree, transfer
from analysis.geometry import degree, is_aG, is_zero_dimensional_scheme

UNPROJECTION_VARIABLE = "s"
VERONESE_NAMES = ("y00", "y01", "y02", "y11", "y12", "y22")


@dataclass(frozen=True)
class ConstructionResult:
    """A constructed ideal and whether it cuts out a zero-dimensional scheme."""

    ideal: Ideal
    zero_dimensional: bool


def _check_linear(ring: PolyRing, entries: Sequence[Polynomial]) -> None:
    ring.check(*entries)
    for e in entries:
        if e and (total_degree(e) != 1 or not is_homogeneous(e)):
            raise InvalidInputError(f"entry {ring.format(e)} is not a linear form")


def _flag(ideal: Ideal, name: str) -> ConstructionResult:
    zero_dim = is_zero_dimensional_scheme(ideal)
    if not zero_dim:
        logger.warning(f"{name}: output ideal does not define a zero-dimensional scheme")
    return ConstructionResult(ideal, zero_dim)


def minors_2x2(M: Sequence[Sequence[Polynomial]]) -> list[Polynomial]:
    rows, cols = len(M), len(M[0])
    out = []
    for r1, r2 in combinations(range(rows), 2):
        for c1, c2 in combinations(range(cols), 2):
            out.append(M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1])
    return out


def scandinavian(M: Sequence[Sequence[Polynomial]], ring: PolyRing) -> ConstructionResult:
    """Ideal of the 2x2 minors of a 3x3 matrix of linear forms."""
    if len(M) != 3 or any(len(row) != 3 for row in M):
        raise ShapeError("scandinavian needs a 3x3 matrix")
    _check_linear(ring, [e for row in M for e in row])
    return _flag(Ideal(ring, minors_2x2(M)), "scandinavian")


# ── 2x2x2 arrays ─────────────────────────────────────────────


def _entry(T, index: Sequence[int]) -> Polynomial:
    a, b, c = index
    return T[a][b][c]


def cube_faces(T) -> list[list[list[Polynomial]]]:
    """The twelve 2x2 faces of a 2x2x2 array.

    Six axis faces fix one index position; rows and columns follow the two
    free positions in increasing order. Six diagonal faces tie two positions
    p < q by index_p = index_q or index_p = 1 - index_q; rows follow index_p
    and columns the remaining position.
    """
    faces = []
    for fixed in range(3):
        free = [p for p in range(3) if p != fixed]
        for v in (0, 1):
            face = []
            for r in (0, 1):
                row = []
                for c in (0, 1):
                    index = [0, 0, 0]
                    index[fixed], index[free[0]], index[free[1]] = v, r, c
                    row.append(_entry(T, index))
                face.append(row)
            faces.append(face)
    for p, q in combinations(range(3), 2):
        other = 3 - p - q
        for flip in (0, 1):
            face = []
            for t in (0, 1):
                row = []
                for u in (0, 1):
                    index = [0, 0, 0]
                    index[p], index[q], index[other] = t, (1 - t) if flip else t, u
                    row.append(_entry(T, index))
                face.append(row)
            faces.append(face)
    return faces


def anglo_american(T, ring: PolyRing) -> ConstructionResult:
    """Ideal of the twelve face determinants of a 2x2x2 array of linear forms."""
    if len(T) != 2 or any(len(s) != 2 or any(len(r) != 2 for r in s) for s in T):
        raise ShapeError("anglo_american needs a 2x2x2 array")
    _check_linear(ring, [e for s in T for r in s for e in r])
    dets = [f[0][0] * f[1][1] - f[0][1] * f[1][0] for f in cube_faces(T)]
    return _flag(Ideal(ring, dets), "anglo_american")


# ── pfaffians ────────────────────────────────────────────────


def pfaffian4(N: Sequence[Sequence[Polynomial]], a: int, b: int, c: int, d: int) -> Polynomial:
    return N[a][b] * N[c][d] - N[a][c] * N[b][d] + N[a][d] * N[b][c]


def _check_antisymmetric(M: Sequence[Sequence[Polynomial]], n: int, what: str) -> None:
    if len(M) != n or any(len(row) != n for row in M):
        raise ShapeError(f"{what} must be {n}x{n}")
    for i in range(n):
        if M[i][i]:
            raise InvalidInputError(f"{what} has a nonzero diagonal entry")
        for j in range(i + 1, n):
            if M[i][j] != -M[j][i]:
                raise InvalidInputError(f"{what} is not antisymmetric at ({i}, {j})")


def extrasymmetric(A, S, q, ring: PolyRing) -> list[list[Polynomial]]:
    """N = [[A, S], [-S, -qA]]."""
    q = q if isinstance(q, Polynomial) else ring.constant(q)
    N = [[ring.zero] * 6 for _ in range(6)]
    for i in range(3):
        for j in range(3):
            N[i][j] = A[i][j]
            N[i][j + 3] = S[i][j]
            N[i + 3][j] = -S[i][j]
            N[i + 3][j + 3] = -q * A[i][j]
    return N


def british(A, S, q, ring: PolyRing) -> ConstructionResult:
    """Ideal of the fifteen order-4 pfaffians of the extrasymmetric matrix built from A, S, q."""
    _check_antisymmetric(A, 3, "A")
    if len(S) != 3 or any(len(row) != 3 for row in S):
        raise ShapeError("S must be 3x3")
    if any(S[i][j] != S[j][i] for i in range(3) for j in range(3)):
        raise InvalidInputError("S is not symmetric")
    _check_linear(ring, [e for row in (*A, *S) for e in row])
    N = extrasymmetric(A, S, q, ring)
    pfaffians = [pfaffian4(N, *quad) for quad in combinations(range(6), 4)]
    return _flag(Ideal(ring, pfaffians), "british")


# ── japanese ─────────────────────────────────────────────────


def japanese(C: Polynomial, F: Polynomial, plane: PolyRing, target: PolyRing | None = None) -> Ideal:
    """Image in P^4 of the plane scheme C = F = 0 under the conic's Veronese hyperplane section."""
    if plane.nvars != 3:
        raise InvalidInputError("japanese needs a ring with three variables")
    plane.check(C, F)
    if total_degree(C) != 2 or not is_homogeneous(C) or total_degree(F) != 3 or not is_homogeneous(F):
        raise InvalidInputError("japanese needs a conic and a cubic")
    try:
        degree(Ideal(plane, [C, F]))
    except NotZeroDimensionalError:
        raise ConstructionError("conic and cubic share a component") from None
    x = plane.gens
    pairs = [(i, j) for i in range(3) for j in range(i, 3)]
    images = {name: x[i] * x[j] for name, (i, j) in zip(VERONESE_NAMES, pairs)}
    kernel = ring_map_kernel(plane, [C, F], images)
    y_ring = kernel.ring
    conic = {name: C.coeff(x[i] * x[j]) for name, (i, j) in zip(VERONESE_NAMES, pairs)}
    pivot = [name for name in VERONESE_NAMES if conic[name]][-1]
    lam = y_ring.zero
    for name, c in conic.items():
        if c:
            lam += y_ring.var(name) * c
    solved = y_ring.var(pivot) - lam * y_ring.domain.quo(y_ring.domain.one, conic[pivot])
    rest = [name for name in VERONESE_NAMES if name != pivot]
    target = target or PolyRing(plane.field, tuple(f"x{i}" for i in range(5)))
    renamed = y_ring.with_variables(rest)
    gens = [substitute(g, y_ring, {pivot: solved}) for g in kernel.gens]
    moved = [transfer(g, y_ring, renamed) for g in gens]
    mapping = {name: target.gens[k] for k, name in enumerate(rest)}
    out = Ideal(target, [substitute(g, renamed, mapping, target=target) for g in moved])
    logger.debug(f"japanese: eliminated {pivot} along the conic hyperplane")
    return out


# ── italian ──────────────────────────────────────────────────


def italian_quadric(I5: Ideal) -> Polynomial:
    """A quadric of I5 : I_P outside I5, for P = [1:0:...:0]; the first in basis order."""
    ring = I5.ring
    maximal = coordinate_ideal(ring, ring.variables[1:])
    residual = colon(I5, maximal)
    for g in residual.groebner.elements:
        if total_degree(g) != 2:
            continue
        r = normal_form(g, I5.groebner)
        if r:
            return r.monic()
    raise ConstructionError("I5 : I_P adds no quadric to I5")


def italian(I5: Ideal, g: Polynomial, target: PolyRing) -> Ideal:
    """I5 S + (x1 x4, x2 x4, x3 x4, f + x4 g) for the colon quadric f of I5 at P = [1:0:0:0]."""
    ring = I5.ring
    if ring.nvars != 4 or target.nvars != 5 or target.variables[:4] != ring.variables:
        raise InvalidInputError("italian needs I5 in k[x0..x3] and a target ring k[x0..x4]")
    target.check(g)
    if total_degree(g) != 1 or not is_homogeneous(g):
        raise InvalidInputError("g must be a linear form")
    x = target.gens
    if not g.coeff(x[4]):
        raise InvalidInputError("g must involve the last variable")
    origin = [ring.domain.one] + [ring.domain.zero] * 3
    if any(h(*origin) for h in I5.gens):
        raise InvalidInputError("P = [1:0:0:0] is not on the degree-5 scheme")
    f = transfer(italian_quadric(I5), ring, target)
    gens = [transfer(h, ring, target) for h in I5.gens]
    gens += [x[1] * x[4], x[2] * x[4], x[3] * x[4], f + x[4] * g]
    out = Ideal(target, gens)
    d = degree(out)
    if d != 6:
        raise ConstructionError(f"italian output has degree {d}")
    if not is_aG(out):
        raise NotArithmeticallyGorensteinError("italian output is not aG")
    return out


# ── anglo-hellenic ───────────────────────────────────────────


def _linear_coefficients(form: Polynomial, ring: PolyRing, allowed: Sequence[int]) -> dict[int, object]:
    out = {}
    for monom, coeff in form.iterterms():
        (m,) = [k for k, e in enumerate(monom) if e]
        if m not in allowed:
            raise InvalidInputError(f"{ring.format(form)} must only involve {[ring.variables[k] for k in allowed]}")
        out[m] = coeff
    return out


def _determinant(M: list[list[Polynomial]], zero: Polynomial) -> Polynomial:
    n = len(M)
    if n == 1:
        return M[0][0]
    total = zero
    for c in range(n):
        if not M[0][c]:
            continue
        minor = [row[:c] + row[c + 1 :] for row in M[1:]]
        term = M[0][c] * _determinant(minor, zero)
        total = total + term if c % 2 == 0 else total - term
    return total


def unprojection_data(A, ring: PolyRing) -> tuple[list[Polynomial], list[Polynomial]]:
    """Pfaffians p0..p4 of A and the unprojection numerators g1..g4."""
    _check_antisymmetric(A, 5, "A")
    _check_linear(ring, [e for row in A for e in row])
    a01 = A[0][1]
    if not a01:
        raise InvalidInputError("a01 must be nonzero")
    p = [pfaffian4(A, *[k for k in range(5) if k != i]) for i in range(5)]
    # p_i = sum_m x_m Q[m][i] for i, m in 1..4
    coeffs = {(j, k): _linear_coefficients(A[j][k], ring, range(1, 5)) for j in range(1, 5) for k in range(j + 1, 5)}
    zero = ring.zero
    Q = [[zero] * 4 for _ in range(4)]
    for i in range(1, 5):
        j, k, l = [t for t in range(1, 5) if t != i]
        for sign, lead, pair in ((1, j, (k, l)), (-1, k, (j, l)), (1, l, (j, k))):
            for m, c in coeffs[pair].items():
                Q[m - 1][i - 1] += A[0][lead] * c * sign
    for i in range(1, 5):
        check = sum((ring.gens[m] * Q[m - 1][i - 1] for m in range(1, 5)), zero)
        if check != p[i]:
            raise ConstructionError(f"pfaffian p{i} is not (x1..x4) Q")
    g = []
    for m in range(4):
        minor = [row[1:] for r, row in enumerate(Q) if r != m]
        cofactor = _determinant(minor, zero)
        if m % 2:
            cofactor = -cofactor
        q, r = cofactor.div(a01)
        if r:
            raise ExactDivisionError(f"cofactor {m + 1} is not divisible by a01")
        g.append(q)
    return p, g


def anglo_hellenic(A, s_value: Polynomial, ring: PolyRing) -> Ideal:
    """I_pf(A) + (x_m s - g_m), with the new variable s replaced by a linear form."""
    if UNPROJECTION_VARIABLE in ring.variables:
        raise InvalidInputError(f"'{UNPROJECTION_VARIABLE}' is reserved for the unprojection variable")
    if ring.nvars != 5:
        raise InvalidInputError("anglo_hellenic works in k[x0..x4]")
    ring.check(s_value)
    p, g = unprojection_data(A, ring)
    big = ring.with_variables(ring.variables + (UNPROJECTION_VARIABLE,))
    s = big.var(UNPROJECTION_VARIABLE)
    gens = [transfer(f, ring, big) for f in p]
    gens += [transfer(ring.gens[m + 1], ring, big) * s - transfer(g[m], ring, big) for m in range(4)]
    mapping: Mapping[str, Polynomial] = {UNPROJECTION_VARIABLE: s_value}
    return Ideal(ring, [substitute(f, big, mapping, target=ring) for f in gens])


def tom_format(M: Sequence[Sequence[Polynomial]], ring: PolyRing) -> tuple[list[list[Polynomial]], Polynomial]:
    """5x5 antisymmetric matrix of a 3x3 matrix M, with s = M[0][0]."""
    z = ring.zero
    m = M
    A = [
        [z, m[1][0], m[2][0], m[0][1], m[0][2]],
        [-m[1][0], z, z, m[1][1], m[1][2]],
        [-m[2][0], z, z, m[2][1], m[2][2]],
        [-m[0][1], -m[1][1], -m[2][1], z, z],
        [-m[0][2], -m[1][2], -m[2][2], z, z],
    ]
    return A, m[0][0]


# ── reference inputs ─────────────────────────────────────────

JAPANESE_DATA: dict[str, tuple[str, str]] = {
    "A2,4 + A0,1^2": ("x1*x2", "x0*x1^2 - x0*x2^2"),
    "A2,4 + A1,2": ("x2^2", "x0*x1^2"),
    "A2,5 + A0,1": ("x1*x2", "x0*x2^2 - x1^3"),
    "A1sp": ("x2^2", "x1^2*x2 - x1^3"),
    "A2sp": ("x1*x2", "x2^3 - x1^3"),
}

# degree-5 schemes in {x4 = 0} through [1:0:0:0], with the colon quadric each one yields
ITALIAN_DATA: dict[str, tuple[list[str], str]] = {
    "A2,6": (["x1*x2 - x0*x3", "x2*x3", "x1^2 - x0*x2", "x2^2", "x3^2"], "x1*x3"),
    "A3,6": (["x1*x3", "x2*x3", "x1^2 - x0*x2", "x2^2", "x3^2"], "x1*x2"),
    "A4,6": (["x1*x2", "x1*x3", "x2*x3", "x2^2 - x1^2", "x3^2 - x1^2"], "x1^2"),
}

# label of the unprojected scheme -> (matrix rows, s); targets are the projective models in P^4
ANGLO_HELLENIC_DATA: dict[str, tuple[list[list[str]], str]] = {
    "A3,5 + A0,1": (
        [
            ["0", "-x3", "-x1", "x1", "x2"],
            ["x3", "0", "0", "x2", "x1"],
            ["x1", "0", "0", "0", "x3"],
            ["-x1", "-x2", "0", "0", "0"],
            ["-x2", "-x1", "-x3", "0", "0"],
        ],
        "x0",
    ),
    "A3,6": (
        [
            ["0", "x2", "x1", "x3", "x0"],
            ["-x2", "0", "0", "0", "x3"],
            ["-x1", "0", "0", "-x2", "0"],
            ["-x3", "0", "x2", "0", "x1"],
            ["-x0", "-x3", "0", "-x1", "0"],
        ],
        "x4",
    ),
}

# entries that match their model only after x4 -> -x4
ANGLO_HELLENIC_FLIP_X4 = frozenset({"A3,5 + A0,1"})


def anglo_hellenic_reference(name: str, ring: PolyRing) -> Ideal:
    """Unprojection of an ANGLO_HELLENIC_DATA entry, in the coordinates of its P^4 model."""
    rows, s_text = ANGLO_HELLENIC_DATA[name]
    A = [[ring.parse(e) for e in row] for row in rows]
    I = anglo_hellenic(A, ring.parse(s_text), ring)
    if name not in ANGLO_HELLENIC_FLIP_X4:
        return I
    n = ring.nvars
    one, zero = ring.domain.one, ring.domain.zero
    M = [[(-one if i == n - 1 else one) if i == j else zero for j in range(n)] for i in range(n)]
    return Ideal(ring, linear_change(I.gens, ring, M))


def _require_i(ring: PolyRing):
    i = ring.field.sqrt_minus_one()
    if i is None:
        raise InvalidInputError(f"{ring.field} has no square root of -1")
    return i


def scandinavian_g6_matrix(ring: PolyRing) -> list[list[Polynomial]]:
    """[[i x4, x1, x2], [-x1, i x4, x3], [-x2, -x3, i x4]], whose minors cut out G_6."""
    i = _require_i(ring)
    _, x1, x2, x3, x4 = ring.gens
    d = x4 * i
    return [[d, x1, x2], [-x1, d, x3], [-x2, -x3, d]]


def anglo_american_g6_cube(ring: PolyRing):
    """2x2x2 array T[a][b][c] whose face determinants cut out G_6."""
    i = _require_i(ring)
    _, x1, x2, x3, x4 = ring.gens
    d = x4 * i
    return [[[-x3, x1], [d, -x2]], [[x2, d], [-x1, x3]]]
