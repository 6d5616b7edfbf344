"""Finite subgroups of a G2-subgroup of SO(E7), found among products of pure octonions.

A product gamma = v1 v2 v3 v4 of pure anisotropic vectors acts on C by
a -> v1(conj(v2)(v3(conj(v4) a))). It stabilizes the line through the unit e
exactly when v4 is proportional to v3(v2 v1) and that octonion is pure; then
gamma / c with rho(gamma) e = c e lies in the stabilizer of e, whose image in
SO(P) is the automorphism group of C.
"""
import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from g2lab.errors import OrderCapExceeded, SearchExhausted
from g2lab.geometry import CliffordElement, is_g2_automorphism, octonions, pi_action, spin_rep
from g2lab.geometry.octonion import zorn_conjugate, zorn_product
from g2lab.groups import MatrixGroup, over_splitting_field, witt_index
from g2lab.scalars import FieldTower, Matrix, Scalar, Vector


logger = logging.getLogger(__name__)

SAMPLE_ATTEMPTS = 32
SEARCH_TRIALS = 3_000
POOL_SIZE = 12
FINITE_ORDER_BOUND = 24
SAMPLE_ORDER_CAP = 2_000


def _sl3_automorphism(a: Matrix) -> Matrix:
    """(a, u, v, b) -> (a, A u, A^-T v, b)."""
    tower = a.tower
    return Matrix.block_diag(tower, [Matrix.identity(tower, 1), a, a.inverse().transpose(), Matrix.identity(tower, 1)])


def _swap_automorphism(tower: FieldTower) -> Matrix:
    """(a, u, v, b) -> (b, -v, -u, a)."""
    entries = [[0] * 8 for _ in range(8)]
    entries[0][7] = entries[7][0] = 1
    for i in range(3):
        entries[1 + i][4 + i] = entries[4 + i][1 + i] = -1
    return Matrix(tower, entries)


def automorphism_pool(tower: FieldTower) -> List[Matrix]:
    """Monomial automorphisms of the Zorn algebra: signed permutations in SL3, torus elements, and the swap."""
    pool = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            a = Matrix(tower, [[signs[i] if perm[i] == j else 0 for j in range(3)] for i in range(3)])
            if a.det() == 1 and not a.is_identity():
                pool.append(_sl3_automorphism(a))
    if tower.conductor % 3 == 0:
        omega = tower.zeta(tower.conductor // 3)
        pool.append(_sl3_automorphism(Matrix.diag(tower, [omega, omega * omega, 1])))
    pool.append(_swap_automorphism(tower))
    checked = [phi for phi in pool if is_g2_automorphism(phi)]
    assert len(checked) == len(pool), 'monomial map is not an automorphism'
    return checked


def candidate_vectors(tower: FieldTower) -> List[Vector]:
    """The orthogonal basis of P, and sums and differences of basis vectors of equal norm.

    Reflections in these vectors generate a finite group of signed permutations of the basis.
    """
    pure = octonions(tower).pure
    basis = list(pure.orthogonal_basis)
    norms = [pure.space.q(b) for b in basis]
    vectors = list(basis)
    for i, j in itertools.combinations(range(len(basis)), 2):
        if norms[i] == norms[j]:
            for sign in (1, -1):
                vectors.append(tuple(x + y * sign for x, y in zip(basis[i], basis[j])))
    return vectors


def _direction(v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    lead = next(x for x in v if x)
    return tuple(x / lead for x in v)


def _fractions(v: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    return tuple(x.to_fraction() for x in v)


def _chain_key(vectors: Sequence[Tuple[Fraction, ...]]) -> tuple:
    """Columns of a -> v1(conj(v2)(v3(conj(v4) a))) scaled to fix e, over the rationals."""
    columns = []
    for k in range(8):
        x = tuple(Fraction(int(k == j)) for j in range(8))
        for i, v in reversed(list(enumerate(vectors))):
            x = zorn_product(v if i % 2 == 0 else zorn_conjugate(v), x)
        columns.append(x)
    c = columns[0][0] + columns[7][0]
    return tuple(x / c for column in columns for x in column)


@dataclass(frozen=True)
class G2Element:
    # gamma / c, with rho(gamma / c) e = e
    element: CliffordElement
    vectors: Tuple[Vector, ...]
    automorphism: Matrix
    image: Matrix
    order: int


def _finite_order(m: Matrix, bound: int = FINITE_ORDER_BOUND) -> Optional[int]:
    power = m
    for k in range(1, bound + 1):
        if power.is_identity():
            return k
        power = power @ m
    return None


def _stabilizing_product(vectors: Sequence[Vector]) -> Optional[G2Element]:
    """gamma = v1 v2 v3 v4 normalized to fix e, or None when gamma is scalar or of infinite order."""
    algebra = octonions(vectors[0][0].tower)
    clifford = algebra.pure.clifford
    gamma = clifford.product_of_vectors(vectors)
    rho = spin_rep(gamma)
    image_of_unit = rho.apply(algebra.e.coords)
    c = image_of_unit[0]
    assert image_of_unit == tuple(x * c for x in algebra.e.coords), 'product does not fix the line through e'
    phi = rho * c.inverse()
    if phi.is_identity():
        return None
    order = _finite_order(phi)
    if order is None:
        return None
    assert is_g2_automorphism(phi)
    return G2Element(
        element=gamma / c, vectors=tuple(vectors), automorphism=phi, image=pi_action(gamma), order=order
    )


def search_g2_elements(
        seed: int = 0,
        pool_size: int = POOL_SIZE,
        trials: int = SEARCH_TRIALS
) -> List[G2Element]:
    """Distinct nonidentity elements of finite order in the stabilizer of e, from a seeded search.

    v1, v2, v3 are drawn from ``candidate_vectors``, half of the time from the orthogonal basis,
    and v4 is solved for. Products whose v4 is not a candidate direction are skipped.
    """
    q = FieldTower(1)
    pure = octonions(q).pure
    candidates = candidate_vectors(q)
    basis = candidates[:7]
    in_c = [_fractions(pure.to_c(v)) for v in candidates]
    by_direction = {_direction(_fractions(v)): k for k, v in enumerate(candidates)}
    rng = random.Random(seed)
    found: Dict[tuple, G2Element] = {}
    seen = set()
    for trial in range(trials):
        i1, i2, i3 = (rng.randrange(len(basis) if rng.random() < 0.5 else len(candidates)) for _ in range(3))
        z = zorn_product(in_c[i3], zorn_product(in_c[i2], in_c[i1]))
        # pure part in P coordinates, as in PureSpace.from_c
        if z[0] + z[7]:
            continue
        i4 = by_direction.get(_direction((z[1], z[4], z[2], z[5], z[3], z[6], z[0])))
        if i4 is None:
            continue
        key = _chain_key([in_c[i] for i in (i1, i2, i3, i4)])
        if key in seen:
            continue
        seen.add(key)
        element = _stabilizing_product([candidates[i] for i in (i1, i2, i3, i4)])
        if element is None:
            continue
        found[element.automorphism.key()] = element
        if len(found) == pool_size:
            logger.debug('search %d filled its pool after %d trials', seed, trial + 1)
            break
    return list(found.values())


def _witt_index_of(group: MatrixGroup) -> int:
    return witt_index(over_splitting_field(group))


def build_g2_finite_sample(
        seed: int = 0,
        tower: Optional[FieldTower] = None,
        generators: int = 2,
        max_witt_index: Optional[int] = None
) -> MatrixGroup:
    """A finite subgroup of a G2-subgroup of SO(E7), generated by images of elements fixing e.

    With ``max_witt_index`` set, pool elements are added one at a time until the Witt index
    of the generated group is at most that value.
    """
    rng = random.Random(seed)
    for attempt in range(SAMPLE_ATTEMPTS):
        pool = search_g2_elements(seed=rng.randrange(2 ** 32))
        if len(pool) < generators:
            continue
        rng.shuffle(pool)
        chosen = pool[:generators]
        rest = pool[generators:]
        name = f'g2sample({seed})'
        try:
            group = MatrixGroup([x.image for x in chosen], name=name, cap=SAMPLE_ORDER_CAP)
            logger.debug('%s has order %d', name, group.order)
            if max_witt_index is not None:
                witt = _witt_index_of(group)
                while witt > max_witt_index and rest:
                    chosen.append(rest.pop())
                    group = MatrixGroup([x.image for x in chosen], name=name, cap=SAMPLE_ORDER_CAP)
                    witt = _witt_index_of(group)
                if witt > max_witt_index:
                    continue
        except OrderCapExceeded:
            continue
        logger.debug('sample %d found at attempt %d: %r', seed, attempt, group)
        if tower is not None:
            group = MatrixGroup([g.coerce(tower) for g in group.generators], name=name)
        return group
    raise SearchExhausted(f'no sample after {SAMPLE_ATTEMPTS} attempts with seed {seed}')

