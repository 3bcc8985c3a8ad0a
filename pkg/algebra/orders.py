# algebra/orders.py
"""
Monomial orders. grevlex is the default; lex, grlex and the block
elimination order elim(k) are used where elimination needs them.
"""
from dataclasses import dataclass
from enum import Enum

from sympy.polys.orderings import MonomialOrder, grevlex, grlex, lex

from algebra.errors import InvalidInputError


class OrderKind(str, Enum):
    grevlex = "grevlex"
    lex = "lex"
    grlex = "grlex"
    elim = "elim"


class BlockEliminationOrder(MonomialOrder):
    """grevlex on the first k variables, ties broken by grevlex on the rest.

    Any monomial involving one of the first k variables exceeds every
    monomial in the remaining ones.
    """

    alias = "elim"
    is_global = True
    is_default = False

    def __init__(self, k: int):
        self.k = k

    def __call__(self, monomial):
        return (grevlex(monomial[: self.k]), grevlex(monomial[self.k :]))

    def __repr__(self):
        return f"BlockEliminationOrder({self.k})"

    def __str__(self):
        return f"elim({self.k})"

    def __eq__(self, other):
        return isinstance(other, BlockEliminationOrder) and other.k == self.k

    def __hash__(self):
        return hash(("elim", self.k))


@dataclass(frozen=True)
class MonomialOrderSpec:
    kind: OrderKind = OrderKind.grevlex
    k: int = 0

    def __post_init__(self):
        if self.kind is OrderKind.elim and self.k < 1:
            raise InvalidInputError("elim(k) needs k >= 1")
        if self.kind is not OrderKind.elim and self.k:
            raise InvalidInputError(f"{self.kind.value} takes no block size")

    @classmethod
    def elimination(cls, k: int) -> "MonomialOrderSpec":
        return cls(OrderKind.elim, k)

    @classmethod
    def parse(cls, text: str) -> "MonomialOrderSpec":
        compact = text.replace(" ", "")
        if compact.startswith("elim(") and compact.endswith(")") and compact[5:-1].isdigit():
            return cls.elimination(int(compact[5:-1]))
        try:
            return cls(OrderKind(compact))
        except ValueError:
            raise InvalidInputError(f"unknown monomial order '{text}'") from None

    def sympy_order(self) -> MonomialOrder:
        if self.kind is OrderKind.elim:
            return BlockEliminationOrder(self.k)
        return {OrderKind.grevlex: grevlex, OrderKind.lex: lex, OrderKind.grlex: grlex}[self.kind]

    def __str__(self) -> str:
        return f"elim({self.k})" if self.kind is OrderKind.elim else self.kind.value


GREVLEX = MonomialOrderSpec()
