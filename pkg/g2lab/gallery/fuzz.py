import logging
import random
from typing import List, Mapping, Sequence

from g2lab.geometry import reference_space, reflection
from g2lab.groups import MatrixGroup
from g2lab.scalars import FieldTower, Matrix


logger = logging.getLogger(__name__)


def random_rotation(tower: FieldTower, rng: random.Random, bound: int = 2) -> Matrix:
    """Product of two reflections of E7 in random anisotropic vectors with small integer coordinates."""
    space = reference_space(tower)
    factors = []
    while len(factors) < 2:
        v = [tower(rng.randint(-bound, bound)) for _ in range(7)]
        if not space.q(v).is_zero():
            factors.append(reflection(v, space))
    return factors[0] @ factors[1]


def fuzz_subgroups(
        bases: Mapping[str, MatrixGroup],
        seed: int = 0,
        count: int = 10,
        max_generators: int = 2,
        conjugate: bool = True
) -> List[MatrixGroup]:
    """Subgroups of the ``bases`` generated by random nonidentity elements, conjugated by a random rotation."""
    if not bases:
        raise ValueError('at least one base group is required')
    rng = random.Random(seed)
    names = sorted(bases)
    subgroups = []
    for _ in range(count):
        name = rng.choice(names)
        base = bases[name]
        if base.order == 1:
            subgroups.append(base)
            continue
        picks = rng.sample(range(1, base.order), min(rng.randint(1, max_generators), base.order - 1))
        sub = base.subgroup([base.elements[i] for i in picks], name=f'{name}<{",".join(map(str, picks))}>')
        if conjugate:
            sub = sub.conjugate(random_rotation(base.tower, rng))
        subgroups.append(sub)
    logger.debug('fuzzed %d subgroups with seed %d', len(subgroups), seed)
    return subgroups


def _monomial(tower: FieldTower, images: Sequence[int], signs: Sequence[int]) -> Matrix:
    """Basis vector i goes to signs[i] times basis vector images[i]."""
    entries = [[0] * len(images) for _ in images]
    for i, (j, s) in enumerate(zip(images, signs)):
        entries[j][i] = s
    return Matrix(tower, entries)


def monomial_rotations(tower: FieldTower) -> MatrixGroup:
    """Signed permutations of (e1, f1, e2, f2, e3, f3, g) in SO(E7), a group of order 384.

    It contains diag(-1, -1, 1, 1, 1, 1, 1), which is not elementwise of type G2.
    """
    ones = [1] * 7
    generators = [
        _monomial(tower, range(7), [-1, -1, 1, 1, 1, 1, 1]),
        # e1 <-> f1 with g -> -g
        _monomial(tower, [1, 0, 2, 3, 4, 5, 6], [1, 1, 1, 1, 1, 1, -1]),
        # the three hyperbolic pairs in a cycle
        _monomial(tower, [2, 3, 4, 5, 0, 1, 6], ones),
        _monomial(tower, [2, 3, 0, 1, 4, 5, 6], ones),
    ]
    return MatrixGroup(generators, name='monomial')


def sign_pair_group(tower: FieldTower) -> MatrixGroup:
    return MatrixGroup([_monomial(tower, range(7), [-1, -1, 1, 1, 1, 1, 1])], name='<diag(-1,-1,1,1,1,1,1)>')
