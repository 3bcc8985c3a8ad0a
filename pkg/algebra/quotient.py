# algebra/quotient.py
"""
Finite-dimensional quotient algebras R/I, written in the coordinates of the
standard-monomial basis of I's reduced Groebner basis.
"""
from collections.abc import Sequence
from functools import cached_property

from sympy.polys.matrices import DomainMatrix

from algebra.groebner import normal_form, standard_monomials
from algebra.ideals import Ideal
from algebra.rings import Monomial, Polynomial

Vector = list


class QuotientAlgebra:
    """R/I for a zero-dimensional ideal I."""

    def __init__(self, ideal: Ideal):
        self.ideal = ideal
        self.ring = ideal.ring
        self.basis: tuple[Monomial, ...] = standard_monomials(ideal.groebner).monomials
        self._index = {m: i for i, m in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def domain(self):
        return self.ring.domain

    def zero_vector(self) -> Vector:
        return [self.domain.zero] * self.dimension

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.ideal.groebner)

    def coordinates(self, f: Polynomial) -> Vector:
        vector = self.zero_vector()
        for monom, coeff in self.reduce(f).iterterms():
            vector[self._index[monom]] = coeff
        return vector

    def element(self, vector: Sequence[object]) -> Polynomial:
        return self.ring.sympy.from_dict({m: c for m, c in zip(self.basis, vector) if c})

    def basis_element(self, i: int) -> Polynomial:
        return self.ring.sympy.term_new(self.basis[i], self.domain.one)

    def unit_vector(self, i: int) -> Vector:
        vector = self.zero_vector()
        vector[i] = self.domain.one
        return vector

    def multiplication_matrix(self, f: Polynomial) -> list[Vector]:
        """Row j holds the coordinates of f times the j-th basis monomial."""
        return [self.coordinates(f.mul_monom(m)) for m in self.basis]

    @cached_property
    def variable_matrices(self) -> tuple[DomainMatrix, ...]:
        n = self.dimension
        return tuple(
            DomainMatrix(self.multiplication_matrix(x), (n, n), self.domain) for x in self.ring.gens
        )

    def product(self, u: Sequence[object], v: Sequence[object]) -> Vector:
        return self.coordinates(self.element(u) * self.element(v))

    def multiply_rows(self, rows: Sequence[Vector], k: int) -> list[Vector]:
        """Images of the given coordinate rows under multiplication by the k-th variable."""
        if not rows:
            return []
        n = self.dimension
        block = DomainMatrix([list(r) for r in rows], (len(rows), n), self.domain)
        return (block * self.variable_matrices[k]).to_list()

    def contains_origin_only(self) -> bool:
        """Every variable is nilpotent, i.e. the support is the origin."""
        if not self.dimension:
            return False
        return all(self.ideal.contains(x**self.dimension) for x in self.ring.gens)
