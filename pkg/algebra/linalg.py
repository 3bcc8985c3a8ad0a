# algebra/linalg.py
"""Exact linear algebra over the coefficient field, on top of sympy's DomainMatrix."""
from collections.abc import Sequence

from sympy.polys.matrices import DomainMatrix

from algebra.errors import SingularMatrixError


def _matrix(rows: Sequence[Sequence[object]], ncols: int, domain) -> DomainMatrix:
    return DomainMatrix([list(row) for row in rows], (len(rows), ncols), domain)


def rank(rows: Sequence[Sequence[object]], ncols: int, domain) -> int:
    if not rows or not ncols:
        return 0
    return _matrix(rows, ncols, domain).rank()


def row_basis(rows: Sequence[Sequence[object]], ncols: int, domain) -> list[list[object]]:
    """Nonzero rows of the reduced row echelon form: a canonical basis of the row span."""
    if not rows or not ncols:
        return []
    reduced, pivots = _matrix(rows, ncols, domain).rref()
    return [list(row) for row in reduced.to_list()[: len(pivots)]]


def nullspace(rows: Sequence[Sequence[object]], ncols: int, domain) -> list[list[object]]:
    """Basis of { v : M v = 0 } as a list of vectors."""
    if not ncols:
        return []
    if not rows:
        return [[domain.one if i == j else domain.zero for j in range(ncols)] for i in range(ncols)]
    basis = _matrix(rows, ncols, domain).nullspace()
    return [list(row) for row in basis.to_list() if any(row)]


def determinant(rows: Sequence[Sequence[object]], domain):
    return _matrix(rows, len(rows), domain).det()


def transpose(rows: Sequence[Sequence[object]]) -> list[list[object]]:
    return [list(col) for col in zip(*rows)]


def random_invertible(field_spec, n: int, rng) -> list[list[object]]:
    """Seeded random n x n matrix with nonzero determinant over the field."""
    while True:
        rows = [[field_spec.random_scalar(rng) for _ in range(n)] for _ in range(n)]
        if determinant(rows, field_spec.domain):
            return rows


def inverse(rows: Sequence[Sequence[object]], domain) -> list[list[object]]:
    M = _matrix(rows, len(rows), domain)
    if not M.det():
        raise SingularMatrixError()
    return M.inv().to_list()
