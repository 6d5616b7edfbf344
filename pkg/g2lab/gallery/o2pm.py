"""Finite subgroups of the similitude group O2+- of the hyperbolic plane, placed in SO(E7).

A similitude g of the plane with q(gx) = mu(g) q(x), mu = +-1, and
determinant eps(g) acts on E7 = H(P) + <a, b, c> as g on P, its
contragredient on P*, and by eps, mu, eps mu on an orthogonal basis of
the complement.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from g2lab.config import Case
from g2lab.decide.classify import D8_PROFILE, Z4XZ2_PROFILE
from g2lab.errors import ConductorTooSmall, SimilitudeFactorNotPlusMinusOne
from g2lab.gallery.embedding import orthogonal_embedding
from g2lab.geometry import QuadSpace, isometry_class
from g2lab.groups import MatrixGroup
from g2lab.scalars import FieldTower, Matrix, Scalar


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class O2pmGenerator:
    matrix: Matrix
    # declared similitude factor, checked against the matrix
    mu: Optional[int] = None


@dataclass(frozen=True)
class O2pmSubgroupSpec:
    tower: FieldTower
    generators: Tuple[O2pmGenerator, ...]
    name: str = 'gamma'


def hyperbolic_plane(tower: FieldTower) -> QuadSpace:
    """q(x, y) = xy."""
    return QuadSpace(Matrix(tower, [[0, 1], [1, 0]]), check=False)


def _diag(tower: FieldTower, a, b) -> Matrix:
    return Matrix(tower, [[a, 0], [0, b]])


def _antidiag(tower: FieldTower, a, b) -> Matrix:
    return Matrix(tower, [[0, a], [b, 0]])


Root = Callable[[int, int], Scalar]

# name -> (conductor, generators as (matrix, mu)); ``z(k, n)`` is zeta_n^k
_PRESETS: Dict[str, Tuple[int, Callable[[FieldTower, Root], List[Tuple[Matrix, int]]]]] = {
    # rotation of order 4 first, then a reflection; mu on them is 1, eta1 or eta2
    'd8': (4, lambda t, z: [(_diag(t, z(1, 4), z(3, 4)), 1), (_antidiag(t, 1, 1), 1)]),
    'd8-eta1': (4, lambda t, z: [(_antidiag(t, -1, 1), -1), (_antidiag(t, 1, 1), 1)]),
    'd8-eta2': (4, lambda t, z: [(_antidiag(t, -1, 1), -1), (_diag(t, 1, -1), -1)]),
    'd16': (8, lambda t, z: [(_diag(t, z(1, 8), z(7, 8)), 1), (_antidiag(t, 1, 1), 1)]),
    'z4xz2': (4, lambda t, z: [(_diag(t, z(1, 4), z(1, 4)), -1), (_antidiag(t, 1, 1), 1)]),
    'q8': (4, lambda t, z: [(_diag(t, z(1, 4), z(3, 4)), 1), (_antidiag(t, 1, -1), -1)]),
    'dic16': (8, lambda t, z: [(_diag(t, z(1, 8), z(7, 8)), 1), (_antidiag(t, 1, -1), -1)]),
    'mixed16': (8, lambda t, z: [(_diag(t, z(1, 8), -z(7, 8)), -1), (_antidiag(t, 1, 1), 1)]),
}

# what classify is expected to return on each preset
PRESET_CASES: Dict[str, Case] = {
    'd8': 'A_contained',
    'd8-eta1': 'A_contained',
    'd8-eta2': 'A_contained',
    'd16': 'A_contained',
    'z4xz2': 'C_z4xz2',
    'q8': 'D_o2pm',
    'dic16': 'D_o2pm',
    'mixed16': 'D_o2pm',
}


def gamma_preset(name: str, tower: Optional[FieldTower] = None) -> O2pmSubgroupSpec:
    if name not in _PRESETS:
        raise ValueError(f'``name={name}`` is not supported, expected one of {sorted(_PRESETS)}')
    conductor, make = _PRESETS[name]
    tower = FieldTower(conductor) if tower is None else tower
    if tower.conductor % conductor:
        raise ConductorTooSmall(f'preset {name} needs a conductor divisible by {conductor}, got {tower.conductor}')

    def z(k: int, n: int) -> Scalar:
        return tower.zeta(k * (tower.conductor // n))

    generators = tuple(O2pmGenerator(matrix=m, mu=mu) for m, mu in make(tower, z))
    return O2pmSubgroupSpec(tower=tower, generators=generators, name=name)


def similitude_characters(spec: O2pmSubgroupSpec) -> List[Tuple[int, int]]:
    """(mu, eps) of every generator."""
    plane = hyperbolic_plane(spec.tower)
    values = []
    for k, gen in enumerate(spec.generators):
        m = gen.matrix.coerce(spec.tower)
        factor = isometry_class(m, plane).factor
        if factor == 1:
            mu = 1
        elif factor == -1:
            mu = -1
        else:
            raise SimilitudeFactorNotPlusMinusOne(f'generator {k} has similitude factor {factor}')
        if gen.mu is not None and gen.mu != mu:
            raise ValueError(f'generator {k} is declared with ``mu={gen.mu}`` but scales q by {mu}')
        det = m.det()
        assert det == 1 or det == -1
        values.append((mu, 1 if det == 1 else -1))
    return values


def predict_gamma_case(group: MatrixGroup, characters: Sequence[Tuple[int, int]]) -> Case:
    """The case classify must return, read off the group and its similitude characters."""
    mu_onto = any(mu == -1 for mu, _ in characters)
    eps_onto = any(eps == -1 for _, eps in characters)
    product_onto = any(mu * eps == -1 for mu, eps in characters)
    profile = group.order_profile()
    is_d8 = group.order == 8 and profile == D8_PROFILE
    if not group.is_abelian() and not is_d8 and mu_onto:
        return 'D_o2pm'
    if group.is_abelian() and group.order == 8 and profile == Z4XZ2_PROFILE and mu_onto and eps_onto and product_onto:
        return 'C_z4xz2'
    return 'A_contained'


def build_gamma(spec: O2pmSubgroupSpec) -> MatrixGroup:
    if not spec.generators:
        raise ValueError('at least one generator is required')
    tower = spec.tower
    characters = similitude_characters(spec)
    planes = [gen.matrix.coerce(tower) for gen in spec.generators]
    rests = [Matrix.diag(tower, [eps, mu, eps * mu]) for mu, eps in characters]
    generators = orthogonal_embedding(tower, planes, rests, Matrix.diag(tower, [2, 2, 2]))
    group = MatrixGroup(generators, name=spec.name)
    logger.info(
        'built %r with (mu, eps) = %s on the generators, expected case %s',
        group, characters, predict_gamma_case(group, characters)
    )
    return group
