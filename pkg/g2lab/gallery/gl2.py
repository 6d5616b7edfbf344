"""GL2(F3) and SL2(F3) inside SO(E7) with all elements of type G2 and no G2-subgroup containing them.

E7 = P + P* + c + H: P a faithful 2-dimensional representation with
nonreal character, c = det and H the 2-dimensional representation
pulled back from GL2(F3) -> S4 -> S3. P is cut out of the representation
induced from a faithful character of a cyclic subgroup of order 8.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from g2lab.config import BetaVariant
from g2lab.errors import ConductorTooSmall, ConstructionVerificationFailed
from g2lab.gallery.embedding import orthogonal_embedding
from g2lab.groups import (
    MatrixGroup, component_basis, inner_product, isotypic_split, multiplicity_vector, power_characters, product,
    trivial_character
)
from g2lab.scalars import FieldTower, Matrix


logger = logging.getLogger(__name__)

F3Matrix = Tuple[int, int, int, int]

IDENTITY: F3Matrix = (1, 0, 0, 1)
# (a, b, c, d) is [[a, b], [c, d]]; the first two generate SL2(F3)
GL_GENERATORS: Tuple[F3Matrix, ...] = ((1, 1, 0, 1), (0, 2, 1, 0), (1, 0, 0, 2))
# multiplication by 1 + i on F9 = F3(i), of order 8
SINGER: F3Matrix = (1, 2, 1, 1)

LINES = ((1, 0), (0, 1), (1, 1), (1, 2))
PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))

EXPECTED_SHAPES = {
    'GL': [(1, 1, True), (2, 1, False), (2, 1, False), (2, 1, True)],
    'SL': [(1, 1, False), (1, 1, False), (1, 1, True), (2, 2, True)],
}


def f3_mul(x: F3Matrix, y: F3Matrix) -> F3Matrix:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3


def f3_det(x: F3Matrix) -> int:
    return (x[0] * x[3] - x[1] * x[2]) % 3


def f3_inverse(x: F3Matrix) -> F3Matrix:
    # det^-1 = det in F3
    det = f3_det(x)
    assert det, 'singular matrix'
    a, b, c, d = x
    return tuple(det * v % 3 for v in (d, -b, -c, a))


def f3_closure(generators: Tuple[F3Matrix, ...]) -> List[F3Matrix]:
    elements, seen, queue = [IDENTITY], {IDENTITY}, deque([IDENTITY])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = f3_mul(x, g)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return elements


def _line_index(v: Tuple[int, int]) -> int:
    x, y = v[0] % 3, v[1] % 3
    # scale so the first nonzero coordinate is 1
    scale = x if x else y
    return LINES.index((x * scale % 3, y * scale % 3))


def pairing_permutation(g: F3Matrix) -> List[int]:
    """The permutation of PAIRINGS induced by the action of g on the four lines of F3^2."""
    a, b, c, d = g
    moved = [_line_index((a * x + b * y, c * x + d * y)) for x, y in LINES]
    images = []
    for pairing in PAIRINGS:
        image = sorted(tuple(sorted(moved[i] for i in pair)) for pair in pairing)
        images.append(next(k for k, p in enumerate(PAIRINGS) if sorted(p) == image))
    return images


def _h_matrix(tower: FieldTower, g: F3Matrix) -> Matrix:
    """The permutation action on the sum-zero plane, in the basis (1, -1, 0), (0, 1, -1)."""
    sigma = pairing_permutation(g)
    columns = []
    for w in ((1, -1, 0), (0, 1, -1)):
        image = [0, 0, 0]
        for k, x in enumerate(w):
            image[sigma[k]] += x
        columns.append((image[0], -image[2]))
    return Matrix.from_columns(tower, columns)


def induced_from_singer(tower: FieldTower) -> Dict[F3Matrix, Matrix]:
    """Ind from <SINGER> of the character SINGER^k -> zeta8^k, on the generators of GL2(F3)."""
    zeta8 = tower.zeta(tower.conductor // 8)
    cyclic: Dict[F3Matrix, int] = {}
    x = IDENTITY
    for k in range(8):
        cyclic[x] = k
        x = f3_mul(x, SINGER)
    assert x == IDENTITY and len(cyclic) == 8

    cosets: List[F3Matrix] = []
    for g in f3_closure(GL_GENERATORS):
        if all(f3_mul(f3_inverse(t), g) not in cyclic for t in cosets):
            cosets.append(g)
    assert len(cosets) == 6

    images = {}
    for g in GL_GENERATORS:
        entries = [[0] * 6 for _ in range(6)]
        for j, t in enumerate(cosets):
            gt = f3_mul(g, t)
            for i, s in enumerate(cosets):
                h = f3_mul(f3_inverse(s), gt)
                if h in cyclic:
                    entries[i][j] = zeta8 ** cyclic[h]
                    break
        images[g] = Matrix(tower, entries)
    return images


def _restrict(m: Matrix, basis: List[tuple]) -> Matrix:
    """The matrix of m on the invariant span of ``basis``."""
    tower = m.tower
    b = Matrix.from_columns(tower, basis)
    _, pivots = b.transpose().rref()
    rows = pivots[:len(basis)]
    b_rows = Matrix(tower, [b.entries[r] for r in rows])
    mb = m @ b
    mb_rows = Matrix(tower, [mb.entries[r] for r in rows])
    restricted = b_rows.inverse() @ mb_rows
    assert b @ restricted == mb
    return restricted


def faithful_plane(tower: FieldTower) -> List[Matrix]:
    """P on the generators of GL2(F3): the 2-dimensional constituent of the induced representation."""
    induced = induced_from_singer(tower)
    group = MatrixGroup([induced[g] for g in GL_GENERATORS], name='Ind C8 -> GL2(F3)')
    assert group.order == 48
    data = [d for d in isotypic_split(group) if d.dim == 2]
    assert len(data) == 1 and not data[0].selfdual, [d.summary() for d in data]
    basis = component_basis(data[0])
    return [_restrict(g, basis) for g in group.generators]


def build_beta(variant: BetaVariant = 'GL', tower: Optional[FieldTower] = None) -> MatrixGroup:
    if variant not in EXPECTED_SHAPES:
        raise ValueError(f'``variant={variant}`` is not supported')
    tower = FieldTower(24) if tower is None else tower
    if tower.conductor % 24:
        raise ConductorTooSmall(f'beta needs a conductor divisible by 24, got {tower.conductor}')

    planes = faithful_plane(tower)
    rests = [
        Matrix.block_diag(tower, [Matrix(tower, [[1 if f3_det(g) == 1 else -1]]), _h_matrix(tower, g)])
        for g in GL_GENERATORS
    ]
    form = Matrix(tower, [[2, 0, 0], [0, 2, -1], [0, -1, 2]])
    generators = orthogonal_embedding(tower, planes, rests, form)
    if variant == 'SL':
        generators = generators[:2]
    group = MatrixGroup(generators, name=f'beta-{variant.lower()}')

    expected = 48 if variant == 'GL' else 24
    shapes = sorted((d.dim, d.multiplicity, d.selfdual) for d in isotypic_split(group))
    if group.order != expected or shapes != EXPECTED_SHAPES[variant]:
        raise ConstructionVerificationFailed(
            f'{group.name}: order {group.order} with isotypic pattern {shapes}, expected {EXPECTED_SHAPES[variant]}'
        )
    logger.debug('built %r with isotypic pattern %s', group, shapes)
    return group


# constituents of Lambda3 E for GL2(F3), with V = P P* - 1
CONSTITUENTS = ('1', 'c', 'H', 'P', 'P*', 'V', 'V c', 'H P')
EXTERIOR_CUBE_MULTIPLICITIES = (3, 1, 3, 2, 2, 1, 2, 2)


@dataclass(frozen=True)
class RepresentationRingCheck:
    exterior_cube: Tuple[int, ...]
    first_plus_symmetric: Tuple[int, ...]
    # Sym2 H = 1 + H
    symmetric_h: bool
    # V is irreducible
    v_irreducible: bool

    @property
    def passed(self) -> bool:
        return (
            self.exterior_cube == self.first_plus_symmetric == EXTERIOR_CUBE_MULTIPLICITIES
            and self.symmetric_h and self.v_irreducible
        )


def gl2_representation_ring(group: MatrixGroup) -> RepresentationRingCheck:
    """Multiplicities of Lambda3 E and E + Sym2 E on the irreducibles of GL2(F3) built from the components of E."""
    data = isotypic_split(group)
    one = trivial_character(group)
    c = next(d.character for d in data if d.dim == 1)
    h = next(d.character for d in data if d.dim == 2 and d.selfdual)
    p, p_dual = (d.character for d in data if d.dim == 2 and not d.selfdual)
    v = tuple(x - 1 for x in product(p, p_dual))
    irreducibles = [one, c, h, p, p_dual, v, product(v, c), product(h, p)]

    powers = power_characters(group)
    squares = [group.product(i, i) for i in range(group.order)]
    symmetric_h = tuple((x * x + h[j]) / 2 for x, j in zip(h, squares))
    first_plus_symmetric = tuple(a + b for a, b in zip(powers.first, powers.symmetric_square()))
    return RepresentationRingCheck(
        exterior_cube=tuple(multiplicity_vector(group, powers.exterior_cube(), irreducibles)),
        first_plus_symmetric=tuple(multiplicity_vector(group, first_plus_symmetric, irreducibles)),
        symmetric_h=symmetric_h == tuple(a + b for a, b in zip(one, h)),
        v_irreducible=inner_product(group, v, v) == 1,
    )
