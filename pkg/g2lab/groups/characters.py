"""Characters of finite matrix groups, evaluated exactly on every enumerated element."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from g2lab.errors import NonIntegerMultiplicity
from g2lab.groups.matrix_group import MatrixGroup
from g2lab.scalars import Matrix, Scalar


logger = logging.getLogger(__name__)

Character = Tuple[Scalar, ...]
LinearCharacter = Tuple[int, ...]


def character(rep: Sequence[Matrix]) -> Character:
    return tuple(m.trace() for m in rep)


@dataclass(frozen=True)
class PowerCharacters:
    """chi(g), chi(g^2), chi(g^3) for every element g."""
    first: Character
    second: Character
    third: Character

    def exterior_square(self) -> Character:
        return tuple((a * a - b) / 2 for a, b in zip(self.first, self.second))

    def symmetric_square(self) -> Character:
        return tuple((a * a + b) / 2 for a, b in zip(self.first, self.second))

    def exterior_cube(self) -> Character:
        return tuple(
            (a * a * a - a * b * 3 + c * 2) / 6 for a, b, c in zip(self.first, self.second, self.third)
        )

    def adams_square(self) -> Character:
        return self.second


def power_characters(group: MatrixGroup, rep: Optional[Sequence[Matrix]] = None) -> PowerCharacters:
    rep = group.elements if rep is None else rep
    chi = character(rep)
    squares = [group.product(i, i) for i in range(group.order)]
    cubes = [group.product(j, i) for i, j in enumerate(squares)]
    return PowerCharacters(
        first=chi,
        second=tuple(chi[i] for i in squares),
        third=tuple(chi[i] for i in cubes),
    )


def dual(group: MatrixGroup, chi: Sequence[Scalar]) -> Character:
    return tuple(chi[j] for j in group.inverses())


def product(chi: Sequence, psi: Sequence) -> Character:
    return tuple(a * b for a, b in zip(chi, psi))


def inner_product(group: MatrixGroup, chi: Sequence, psi: Sequence) -> Scalar:
    """(1/|G|) sum chi(g) psi(g^-1)."""
    inverses = group.inverses()
    acc = group.tower.zero()
    for i, a in enumerate(chi):
        acc = acc + psi[inverses[i]] * a
    return acc / group.order


def is_selfdual(group: MatrixGroup, chi: Sequence[Scalar]) -> bool:
    return tuple(chi) == dual(group, chi)


def multiplicity(beta: Sequence, group: MatrixGroup, chi: Sequence[Scalar]) -> int:
    """Multiplicity of the irreducible character ``beta`` in ``chi``."""
    value = inner_product(group, beta, chi)
    if not value.is_rational():
        raise NonIntegerMultiplicity(f'multiplicity {value} is irrational')
    value = value.to_fraction()
    if value.denominator != 1 or value < 0:
        raise NonIntegerMultiplicity(f'multiplicity {value} is not a nonnegative integer')
    return int(value)


def multiplicity_vector(group: MatrixGroup, chi: Sequence, irreducibles: Sequence[Sequence]) -> List[int]:
    return [multiplicity(psi, group, chi) for psi in irreducibles]


def _closure(group: MatrixGroup, seeds: Sequence[int]) -> List[int]:
    members = {0}
    frontier = [0]
    seeds = sorted(set(seeds))
    while frontier:
        i = frontier.pop()
        for s in seeds:
            j = group.product(i, s)
            if j not in members:
                members.add(j)
                frontier.append(j)
    return sorted(members)


def order2_linear_characters(group: MatrixGroup) -> List[LinearCharacter]:
    """All homomorphisms G -> {1, -1}, the trivial one first."""
    elements = group.elements
    # the squares generate a normal subgroup containing every commutator: [x, y] = x^-2 (x y^-1)^2 y^2
    kernel = _closure(group, [group.product(i, i) for i in range(group.order)])

    # coordinates of every element in G/N = (Z/2)^r
    coords = {i: 0 for i in kernel}
    rank = 0
    for i in range(len(elements)):
        if i in coords:
            continue
        bit = 1 << rank
        coords.update({group.product(i, j): v | bit for j, v in list(coords.items())})
        rank += 1
    logger.debug('%s has %d order-2 linear characters', group.name, 2 ** rank)

    characters = []
    for mask in range(2 ** rank):
        characters.append(tuple(-1 if bin(coords[i] & mask).count('1') % 2 else 1 for i in range(len(elements))))
    return characters


def repring_identity_check(group: MatrixGroup) -> Tuple[bool, Optional[int]]:
    """Whether chi_{L3 E} = chi_E + chi_{Sym2 E} on every element; the first failing index otherwise."""
    powers = power_characters(group)
    for i, (l3, chi, s2) in enumerate(zip(powers.exterior_cube(), powers.first, powers.symmetric_square())):
        if l3 != chi + s2:
            return False, i
    return True, None


def trivial_character(group: MatrixGroup) -> Character:
    return tuple(group.tower.one() for _ in range(group.order))


def as_scalars(group: MatrixGroup, values: Sequence) -> Character:
    return tuple(group.tower(Fraction(v) if isinstance(v, int) else v) for v in values)
