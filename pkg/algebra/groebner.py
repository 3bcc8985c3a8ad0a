# algebra/groebner.py
"""
Buchberger's algorithm with the normal selection strategy and the
Gebauer-Moeller pair criteria, followed by minimalization and
inter-reduction, so every basis returned is the reduced (canonical) one.
"""
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from loguru import logger

from algebra.errors import NotZeroDimensionalError
from algebra.rings import Monomial, Polynomial, PolyRing, divides


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    @cached_property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.LM for g in self.elements)

    @property
    def is_zero_ideal(self) -> bool:
        return not self.elements

    @property
    def is_unit_ideal(self) -> bool:
        return any(not any(m) for m in self.leading_monomials)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class StandardMonomialBasis:
    ring: PolyRing
    monomials: tuple[Monomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def in_degree(self, t: int) -> list[Monomial]:
        return [m for m in self.monomials if sum(m) == t]


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    R = f.ring
    lcm = R.monomial_lcm(f.LM, g.LM)
    return f.mul_monom(R.monomial_div(lcm, f.LM)) - g.mul_monom(R.monomial_div(lcm, g.LM))


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    G.ring.check(f)
    if G.is_zero_ideal:
        return f
    return f.rem(list(G.elements))


def _update(G: list[Polynomial], P: set[tuple[int, int]], f: Polynomial) -> None:
    """Add f to G and update the pair set in place (Gebauer-Moeller)."""
    R = f.ring
    lcm, mul, div = R.monomial_lcm, R.monomial_mul, R.monomial_div
    lmf = f.LM
    lmG = [g.LM for g in G]
    P.difference_update(
        {
            p
            for p in P
            if div(lcm(lmG[p[0]], lmG[p[1]]), lmf)
            and lcm(lmG[p[0]], lmG[p[1]]) != lcm(lmG[p[0]], lmf)
            and lcm(lmG[p[0]], lmG[p[1]]) != lcm(lmG[p[1]], lmf)
        }
    )
    by_lcm: dict[Monomial, list[int]] = {}
    for i in range(len(G)):
        by_lcm.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal: list[Monomial] = []
    for L in sorted(by_lcm, key=R.order):
        if all(not div(L, L_) for L_ in minimal):
            minimal.append(L)
    for L in minimal:
        # coprime leading monomials: the pair reduces to zero
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in by_lcm[L]):
            P.add((min(by_lcm[L]), len(G)))
    G.append(f)


def _minimalize(G: list[Polynomial]) -> list[Polynomial]:
    R = G[0].ring
    kept: list[Polynomial] = []
    for f in sorted(G, key=lambda h: R.order(h.LM)):
        if all(not R.monomial_div(f.LM, g.LM) for g in kept):
            kept.append(f)
    return kept


def _interreduce(G: list[Polynomial]) -> list[Polynomial]:
    reduced = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1 :]
        reduced.append((g.rem(others) if others else g).monic())
    return reduced


def buchberger(gens: Sequence[Polynomial], ring: PolyRing) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens; zeros are ignored."""
    ring.check(*gens)
    R = ring.sympy
    G: list[Polynomial] = []
    P: set[tuple[int, int]] = set()
    for f in gens:
        if f:
            _update(G, P, f.monic())

    def pair_key(p: tuple[int, int]):
        lcm = R.monomial_lcm(G[p[0]].LM, G[p[1]].LM)
        return (sum(lcm), R.order(lcm), p[1], p[0])

    reductions = 0
    while P:
        pair = min(P, key=pair_key)
        P.remove(pair)
        r = spoly(G[pair[0]], G[pair[1]]).rem(G)
        reductions += 1
        if r:
            _update(G, P, r.monic())
    if not G:
        return GroebnerBasis(ring, ())
    basis = _interreduce(_minimalize(G))
    basis.sort(key=lambda g: R.order(g.LM))
    logger.debug(f"buchberger: {len(gens)} generators -> {len(basis)} basis elements after {reductions} reductions")
    return GroebnerBasis(ring, tuple(basis))


def is_zero_dimensional(G: GroebnerBasis) -> bool:
    """Every variable has a pure power among the leading monomials."""
    if G.is_unit_ideal:
        return True
    n = G.ring.nvars
    covered = set()
    for m in G.leading_monomials:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            covered.add(support[0])
    return len(covered) == n


def standard_monomials(G: GroebnerBasis, degree_cap: int | None = None) -> StandardMonomialBasis:
    """Monomials outside the leading-monomial ideal, optionally up to a total degree."""
    if degree_cap is None and not is_zero_dimensional(G):
        raise NotZeroDimensionalError(f"ideal in {G.ring} is not zero-dimensional")
    R = G.ring.sympy
    leads = G.leading_monomials
    n = G.ring.nvars

    def standard(m: Monomial) -> bool:
        return not any(divides(lm, m) for lm in leads)

    start = (0,) * n
    if not standard(start):
        return StandardMonomialBasis(G.ring, ())
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            if degree_cap is not None and sum(m) >= degree_cap:
                continue
            for i in range(n):
                u = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if u not in found and standard(u):
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return StandardMonomialBasis(G.ring, tuple(sorted(found, key=lambda m: (sum(m), R.order(m)))))
