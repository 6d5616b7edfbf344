"""Diagonal gallery groups: finite subgroups of the maximal torus, and Z/4 x Z/2 through its nontrivial characters."""
import logging
import math
from typing import Optional

from g2lab.errors import ConductorTooSmall
from g2lab.gallery.embedding import orthogonal_embedding
from g2lab.groups import MatrixGroup
from g2lab.scalars import FieldTower, Matrix, Scalar


logger = logging.getLogger(__name__)


def _root_of_unity(tower: FieldTower, n: int) -> Scalar:
    return tower.zeta(tower.conductor // n)


def torus_element(x: Scalar, y: Scalar) -> Matrix:
    """t(x, y): eigenvalues x, y, xy and their inverses on (e1, e2, e3), 1 on g."""
    tower = x.tower
    xy = x * y
    return Matrix.diag(tower, [x, x.inverse(), y, y.inverse(), xy, xy.inverse(), 1])


def build_torus_subgroup(n1: int, n2: int, tower: Optional[FieldTower] = None) -> MatrixGroup:
    """<t(zeta_n1, 1), t(1, zeta_n2)>, a subgroup of the maximal torus of a G2-subgroup."""
    if n1 < 1 or n2 < 1:
        raise ValueError(f'``n1={n1}``, ``n2={n2}`` are not supported')
    conductor = math.lcm(n1, n2)
    if tower is None:
        tower = FieldTower(conductor)
    elif tower.conductor % conductor:
        raise ConductorTooSmall(f'torus({n1}, {n2}) needs a conductor divisible by {conductor}, got {tower.conductor}')
    one = tower.one()
    generators = [torus_element(_root_of_unity(tower, n1), one), torus_element(one, _root_of_unity(tower, n2))]
    generators = [g for g in generators if not g.is_identity()] or generators[:1]
    group = MatrixGroup(generators, name=f'torus({n1}, {n2})')
    logger.debug('built %r', group)
    return group


def build_alpha(tower: Optional[FieldTower] = None) -> MatrixGroup:
    """Z/4 x Z/2 = <a, b> acting on E7 by its seven nontrivial characters.

    The character (r, s) sends a to i^r and b to (-1)^s. The dual pairs
    (1, 0), (3, 0) and (1, 1), (3, 1) span H(k^2); the real characters
    (2, 0), (0, 1), (2, 1) act on an orthogonal basis of the complement.
    """
    tower = FieldTower(4) if tower is None else tower
    if tower.conductor % 4:
        raise ConductorTooSmall(f'alpha needs a conductor divisible by 4, got {tower.conductor}')
    i = tower.zeta(tower.conductor // 4)
    a_plane = Matrix.diag(tower, [i, i])
    b_plane = Matrix.diag(tower, [1, -1])
    a_rest = Matrix.diag(tower, [-1, 1, -1])
    b_rest = Matrix.diag(tower, [1, -1, -1])
    form = Matrix.diag(tower, [2, 2, 2])
    generators = orthogonal_embedding(tower, [a_plane, b_plane], [a_rest, b_rest], form)
    group = MatrixGroup(generators, name='alpha')
    logger.debug('built %r', group)
    return group
