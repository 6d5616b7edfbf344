"""Isotypic decomposition of a representation of a finite matrix group.

The centre of the algebra spanned by the representation is spanned by the
images of the class sums. A generic central element separates the isotypic
components; its eigenvalues lie in Q(zeta_e), e the exponent, and the
components are cut out by Lagrange idempotents.
"""
import logging
import math
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

from g2lab.config import CENTRAL_SWEEP
from g2lab.errors import ExponentNotDividingConductor, IncompleteSplit, SplitFailed
from g2lab.groups.characters import Character, dual, inner_product
from g2lab.groups.matrix_group import MatrixGroup, common_tower
from g2lab.scalars import FieldTower, Matrix, Poly, charpoly, intersect_kernels, roots_in_tower, span_basis


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsotypicDatum:
    projector: Matrix
    # dimension of the irreducible constituent and its multiplicity
    dim: int
    multiplicity: int
    selfdual: bool
    # character of the irreducible constituent
    character: Character

    @property
    def component_dim(self) -> int:
        return self.dim * self.multiplicity

    def summary(self) -> dict:
        return {'dim': self.dim, 'multiplicity': self.multiplicity, 'selfdual': self.selfdual}


def check_conductor(group: MatrixGroup, tower: FieldTower) -> None:
    exponent = group.exponent()
    # Q(zeta_m) = Q(zeta_2m) for odd m
    conductor = tower.conductor if tower.conductor % 2 == 0 else 2 * tower.conductor
    if conductor % exponent:
        raise ExponentNotDividingConductor(
            f'exponent {exponent} of {group.name} does not divide the conductor {tower.conductor}'
        )


def over_splitting_field(group: MatrixGroup) -> MatrixGroup:
    """``group`` itself, or the same generators over a tower whose conductor the exponent divides."""
    try:
        check_conductor(group, group.tower)
        return group
    except ExponentNotDividingConductor:
        pass
    tower = group.tower.with_conductor(math.lcm(group.tower.conductor, group.exponent()))
    logger.debug('moving %s to %r', group.name, tower)
    return MatrixGroup([g.coerce(tower) for g in group.generators], name=group.name, cap=group.cap)


def _flatten(m: Matrix) -> tuple:
    return tuple(x for row in m.entries for x in row)


def _sum(matrices: Sequence[Matrix]) -> Matrix:
    acc = matrices[0]
    for m in matrices[1:]:
        acc = acc + m
    return acc


def _sweep(attempt: int, n: int, rng: random.Random) -> List[int]:
    if attempt == 0:
        return list(range(1, n + 1))
    bound = 4 * attempt + 4
    return [rng.randint(-bound, bound) for _ in range(n)]


def element_images(group: MatrixGroup, rep: Optional[Sequence[Matrix]]) -> List[Matrix]:
    if rep is None:
        return group.elements
    rep = list(rep)
    if len(rep) != group.order:
        raise ValueError('one matrix per group element is required')
    tower = common_tower(rep)
    return [m.coerce(tower) for m in rep]


def generator_images(group: MatrixGroup, rep: Sequence[Matrix]) -> List[Matrix]:
    return [rep[group.index(g)] for g in group.generators]


def centralizer_dimension(group: MatrixGroup, rep: Optional[Sequence[Matrix]] = None) -> int:
    """dim of {X : X rho(g) = rho(g) X}, from the linear equations on the generators."""
    rep = element_images(group, rep)
    tower = rep[0].tower
    n = rep[0].rows
    rows = []
    for m in generator_images(group, rep):
        # coefficient of X[a][b] in (X m - m X)[i][j]
        for i in range(n):
            for j in range(n):
                row = [tower.zero()] * (n * n)
                for k in range(n):
                    row[i * n + k] = row[i * n + k] + m[k, j]
                    row[k * n + j] = row[k * n + j] - m[i, k]
                rows.append(row)
    return n * n - Matrix(tower, rows).rank()


def central_element(group: MatrixGroup, rep: Sequence[Matrix], seed: int = 0) -> tuple:
    """A central element whose distinct eigenvalues are as many as the isotypic components.

    Returns (z, minimal polynomial, number of components).
    """
    class_sums = [_sum([rep[i] for i in cls]) for cls in group.conjugacy_classes()]
    tower = rep[0].tower
    components = len(span_basis(tower, [_flatten(s) for s in class_sums]))
    rng = random.Random(seed)
    for attempt in range(CENTRAL_SWEEP):
        coeffs = _sweep(attempt, len(class_sums), rng)
        z = _sum([s * c for s, c in zip(class_sums, coeffs)])
        minimal = charpoly(z).squarefree_part()
        if minimal.degree == components:
            logger.debug('central element found at attempt %d for %s', attempt, group.name)
            return z, minimal, components
    raise SplitFailed(f'no separating central element for {group.name} after {CENTRAL_SWEEP} attempts')


def isotypic_split(group: MatrixGroup, rep: Optional[Sequence[Matrix]] = None, seed: int = 0) -> List[IsotypicDatum]:
    rep = element_images(group, rep)
    tower = rep[0].tower
    n = rep[0].rows
    check_conductor(group, tower)

    z, minimal, components = central_element(group, rep, seed)
    try:
        roots = roots_in_tower(minimal, require_complete=True, seed=seed)
    except IncompleteSplit as e:
        raise SplitFailed(f'central minimal polynomial of {group.name} does not split: {e}') from e

    t = Poly.t(tower)
    data = []
    for root, _ in roots:
        cofactor = minimal // (t - root)
        projector = cofactor.evaluate_matrix(z) * (1 / cofactor(root))
        assert projector @ projector == projector
        values = tuple((projector @ g).trace() for g in rep)
        norm = inner_product(group, values, values)
        assert norm.is_rational() and norm.to_fraction().denominator == 1
        multiplicity = math.isqrt(int(norm.to_fraction()))
        assert multiplicity * multiplicity == norm.to_fraction()
        size = projector.trace().to_fraction()
        assert size.denominator == 1 and size.numerator % multiplicity == 0
        character = tuple(v / multiplicity for v in values)
        data.append(IsotypicDatum(
            projector=projector,
            dim=size.numerator // multiplicity,
            multiplicity=multiplicity,
            selfdual=dual(group, character) == character,
            character=character,
        ))

    assert len(data) == components
    assert sum(d.component_dim for d in data) == n
    data.sort(key=lambda d: [c.coefficients() for c in d.character])
    logger.debug(
        '%s splits into %s', group.name, [(d.dim, d.multiplicity, d.selfdual) for d in data]
    )
    return data


def component_basis(datum: IsotypicDatum) -> list:
    return span_basis(datum.projector.tower, datum.projector.columns())


def eigenspace_in_component(datum: IsotypicDatum, m: Matrix, value) -> list:
    """Vectors of the component on which ``m`` acts by ``value``."""
    tower = m.tower
    n = m.rows
    ident = Matrix.identity(tower, n)
    return intersect_kernels([m - ident * value, ident - datum.projector.coerce(tower)])
