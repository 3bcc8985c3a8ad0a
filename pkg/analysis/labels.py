# analysis/labels.py
"""
Names for local Artinian Gorenstein algebras of small degree and for their
direct sums.

Atoms are the normal forms A_{n,d} (embedding dimension n, degree d) and the
two degree-6 algebras with Hilbert function (1,2,2,1), written A1sp and A2sp.
A label is a multiset of atoms, printed as e.g. "A2,4 + A0,1^2".
"""
import re
from collections import Counter
from dataclasses import dataclass
from functools import cache

from algebra.errors import ClassificationRangeError, InvalidInputError

MAX_CLASSIFIED_DEGREE = 6
SPECIAL_HILBERT = (1, 2, 2, 1)

_ATOM = re.compile(r"^A(?:(\d+),(\d+)|([12])sp)$")


@dataclass(frozen=True)
class Atom:
    n: int
    d: int
    special: int = 0  # 1 or 2 for A1sp / A2sp

    def __post_init__(self):
        if self.special:
            if self.special not in (1, 2) or (self.n, self.d) != (2, 6):
                raise InvalidInputError(f"bad special atom {self.special}")
            return
        if (self.n, self.d) in ((0, 1), (1, 2)):
            return
        if not (3 <= self.d <= MAX_CLASSIFIED_DEGREE and 1 <= self.n <= self.d - 2):
            raise InvalidInputError(f"A{self.n},{self.d} is not a realizable Gorenstein atom")

    @classmethod
    def special_atom(cls, which: int) -> "Atom":
        return cls(2, 6, which)

    @classmethod
    def parse(cls, text: str) -> "Atom":
        match = _ATOM.match(text.strip())
        if not match:
            raise InvalidInputError(f"cannot read algebra atom '{text}'")
        if match.group(3):
            return cls.special_atom(int(match.group(3)))
        return cls(int(match.group(1)), int(match.group(2)))

    @property
    def degree(self) -> int:
        return self.d

    @property
    def hilbert(self) -> tuple[int, ...]:
        if self.special:
            return SPECIAL_HILBERT
        if self.d == 1:
            return (1,)
        return (1, self.n) + (1,) * (self.d - self.n - 1)

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (-self.d, -self.n, self.special)

    def __str__(self) -> str:
        return f"A{self.special}sp" if self.special else f"A{self.n},{self.d}"


POINT = Atom(0, 1)


@dataclass(frozen=True)
class AlgebraLabel:
    summands: tuple[Atom, ...]

    def __post_init__(self):
        if not self.summands:
            raise InvalidInputError("a label needs at least one summand")
        object.__setattr__(self, "summands", tuple(sorted(self.summands, key=lambda a: a.sort_key)))

    @classmethod
    def of(cls, *atoms: Atom) -> "AlgebraLabel":
        return cls(tuple(atoms))

    @classmethod
    def parse(cls, text: str) -> "AlgebraLabel":
        atoms: list[Atom] = []
        for part in text.split("+"):
            part = part.strip()
            base, _, power = part.partition("^")
            count = int(power) if power else 1
            if count < 1:
                raise InvalidInputError(f"bad multiplicity in '{part}'")
            atoms.extend([Atom.parse(base)] * count)
        return cls(tuple(atoms))

    @property
    def degree(self) -> int:
        return sum(a.degree for a in self.summands)

    @property
    def is_local(self) -> bool:
        return len(self.summands) == 1

    def without_point(self) -> "AlgebraLabel":
        """The label with one simple-point summand removed."""
        if POINT not in self.summands:
            raise InvalidInputError(f"{self} has no simple point")
        rest = list(self.summands)
        rest.remove(POINT)
        return AlgebraLabel(tuple(rest))

    def __str__(self) -> str:
        counts = Counter(self.summands)
        parts = []
        for atom in sorted(counts, key=lambda a: a.sort_key):
            k = counts[atom]
            parts.append(f"{atom}^{k}" if k > 1 else str(atom))
        return " + ".join(parts)


def realizable_atoms(d: int) -> list[Atom]:
    """All local Gorenstein atoms of degree d."""
    if d == 1:
        return [POINT]
    if d == 2:
        return [Atom(1, 2)]
    if not 3 <= d <= MAX_CLASSIFIED_DEGREE:
        raise ClassificationRangeError(f"no classification in degree {d}")
    atoms = [Atom(n, d) for n in range(1, d - 1)]
    if d == 6:
        atoms += [Atom.special_atom(1), Atom.special_atom(2)]
    return atoms


@cache
def realizable_labels(d: int) -> tuple[AlgebraLabel, ...]:
    """Every Gorenstein algebra of degree d up to isomorphism, as direct sums of atoms."""
    if not 1 <= d <= MAX_CLASSIFIED_DEGREE:
        raise ClassificationRangeError(f"no classification in degree {d}")

    def build(remaining: int, largest: int) -> list[list[Atom]]:
        if remaining == 0:
            return [[]]
        out = []
        for size in range(min(remaining, largest), 0, -1):
            for atom in realizable_atoms(size):
                for tail in build(remaining - size, size):
                    out.append([atom, *tail])
        return out

    labels = {AlgebraLabel(tuple(parts)) for parts in build(d, d)}
    return tuple(sorted(labels, key=lambda lab: [a.sort_key for a in lab.summands]))


def is_realizable_hilbert(hilbert: tuple[int, ...]) -> bool:
    """Whether some local Gorenstein algebra of degree <= 6 has this Hilbert function."""
    d = sum(hilbert)
    if d > MAX_CLASSIFIED_DEGREE:
        raise ClassificationRangeError(f"no classification in degree {d}")
    if d < 1:
        return False
    return tuple(hilbert) in {atom.hilbert for atom in realizable_atoms(d)}
