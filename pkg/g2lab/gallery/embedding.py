import logging
from typing import List, Sequence

from g2lab.errors import ConstructionVerificationFailed
from g2lab.geometry import QuadSpace, find_isometry, isometry_class, reference_space
from g2lab.groups import common_tower
from g2lab.scalars import FieldTower, Matrix


logger = logging.getLogger(__name__)


def orthogonal_embedding(
        tower: FieldTower,
        isotropic: Sequence[Matrix],
        anisotropic: Sequence[Matrix],
        form: Matrix
) -> List[Matrix]:
    """Generators of SO(E7) acting by M + M^-T on a hyperbolic space H(U) and by A on its complement.

    ``isotropic[i]`` acts on U = span(e1, .., en), its contragredient on
    span(f1, .., fn), and ``anisotropic[i]`` on the remaining coordinates,
    carried over by an isometry from the space with gram matrix ``form``.
    """
    if not isotropic or len(isotropic) != len(anisotropic):
        raise ValueError('one isotropic and one anisotropic block per generator is required')
    n = isotropic[0].rows
    k = 7 - 2 * n
    if k < 1 or form.rows != k:
        raise ValueError(f'``n={n}`` with a complement of dimension {form.rows} does not fill E7')

    tail = QuadSpace(reference_space(tower).gram.block(2 * n, 7, 2 * n, 7), check=False)
    isometry = find_isometry(QuadSpace(form.coerce(tower), check=False), tail)
    t = isometry.matrix
    if isometry.tower_extensions:
        logger.debug('complement isometry adjoined %s', [str(x) for x in isometry.tower_extensions])
    t_inv = t.inverse()
    tower = t.tower

    images = []
    for m, a in zip(isotropic, anisotropic):
        m = m.coerce(tower)
        dual = m.inverse().transpose()
        rest = t @ a.coerce(tower) @ t_inv
        entries = [[tower.zero()] * 7 for _ in range(7)]
        for i in range(n):
            for j in range(n):
                entries[2 * i][2 * j] = m[i, j]
                entries[2 * i + 1][2 * j + 1] = dual[i, j]
        for i in range(k):
            for j in range(k):
                entries[2 * n + i][2 * n + j] = rest[i, j]
        images.append(Matrix(tower, entries))
    tower = common_tower(images)
    images = [g.coerce(tower) for g in images]
    verify_special_orthogonal(images)
    return images


def verify_special_orthogonal(generators: Sequence[Matrix]) -> None:
    for g in generators:
        similitude = isometry_class(g, reference_space(g.tower))
        if similitude.factor != 1 or not similitude.proper:
            raise ConstructionVerificationFailed('generator is not in SO(E7)')
