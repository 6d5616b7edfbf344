"""Clifford algebras C(V) over an orthogonal anisotropic basis b_1..b_n of V.

Elements are sparse maps from subset masks to Scalars; bit i of a mask
stands for b_{i+1}, monomials are written in increasing index order.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from g2lab.config import MAX_CLIFFORD_DIM
from g2lab.errors import (
    AlgebraMismatch, DoesNotNormalizeV, NotHomogeneous, NotInvertible, NotProperIsometry, NotScalar
)
from g2lab.geometry.quadspace import QuadSpace, congruence_diagonalize, isometry_class, reflection
from g2lab.scalars import FieldTower, Matrix, Scalar, Vector, sqrt_of, try_sqrt


logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def monomial_sign(a: int, b: int) -> int:
    """Sign of reordering b_A b_B into increasing order: (-1)^#{i in A, j in B, i > j}."""
    swaps = 0
    j = 0
    while b >> j:
        if b >> j & 1:
            swaps += bin(a >> (j + 1)).count('1')
        j += 1
    return -1 if swaps % 2 else 1


def transpose_sign(mask: int) -> int:
    k = bin(mask).count('1')
    return -1 if (k * (k - 1) // 2) % 2 else 1


class CliffordAlgebra:
    def __init__(self, space: QuadSpace, basis: Optional[Sequence[Sequence[Scalar]]] = None) -> None:
        if space.dim > MAX_CLIFFORD_DIM:
            raise ValueError(f'``dim={space.dim}`` exceeds the supported {MAX_CLIFFORD_DIM}')
        if basis is None:
            basis, values = congruence_diagonalize(space)
        else:
            basis = [tuple(space.tower(x) for x in b) for b in basis]
            values = [space.q(b) for b in basis]
            if len(basis) != space.dim or any(v.is_zero() for v in values):
                raise ValueError('basis must consist of dim V anisotropic vectors')
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    if not space.beta(basis[i], basis[j]).is_zero():
                        raise ValueError('basis must be orthogonal')
        self.space = space
        self.tower = space.tower
        self.n = space.dim
        self.basis: Tuple[Vector, ...] = tuple(basis)
        self.values: Tuple[Scalar, ...] = tuple(values)
        # columns are the b_i in V coordinates
        self.change = Matrix.from_columns(self.tower, self.basis)
        self.change_inverse = self.change.inverse()
        self._factors: Dict[int, Scalar] = {}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordAlgebra):
            return NotImplemented
        return self is other or (self.space == other.space and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.tower, self.basis))

    def __repr__(self) -> str:
        return f'CliffordAlgebra(dim={self.n}, values={[str(v) for v in self.values]})'

    def over(self, tower: FieldTower) -> 'CliffordAlgebra':
        """The same algebra with scalars extended to ``tower``."""
        if tower == self.tower:
            return self
        return _extended_algebra(self, tower)

    def square_factor(self, mask: int) -> Scalar:
        """prod of d_i over the bits of ``mask``."""
        if mask not in self._factors:
            acc = self.tower.one()
            for i in range(self.n):
                if mask >> i & 1:
                    acc = acc * self.values[i]
            self._factors[mask] = acc
        return self._factors[mask]

    # constructors

    def element(self, terms: Mapping[int, Union[Scalar, int]]) -> 'CliffordElement':
        return CliffordElement(self, {m: self.tower(c) for m, c in terms.items()})

    def scalar(self, c) -> 'CliffordElement':
        return self.element({0: c})

    def one(self) -> 'CliffordElement':
        return self.scalar(1)

    def zero(self) -> 'CliffordElement':
        return self.element({})

    def monomial(self, mask: int) -> 'CliffordElement':
        return self.element({mask: 1})

    def generator(self, i: int) -> 'CliffordElement':
        return self.monomial(1 << i)

    def vector(self, v: Sequence[Scalar]) -> 'CliffordElement':
        """Embed a vector given in V coordinates."""
        coords = self.change_inverse.apply(v)
        return self.element({1 << i: c for i, c in enumerate(coords)})

    def product_of_vectors(self, vectors: Iterable[Sequence[Scalar]]) -> 'CliffordElement':
        acc = self.one()
        for v in vectors:
            acc = acc * self.vector(v)
        return acc

    def vector_part(self, x: 'CliffordElement') -> Optional[Vector]:
        """V coordinates of ``x`` if it lies in V, else None."""
        if any(bin(m).count('1') != 1 for m in x.terms):
            return None
        coords = [x.terms.get(1 << i, self.tower.zero()) for i in range(self.n)]
        return self.change.apply(coords)


@lru_cache(maxsize=None)
def _extended_algebra(algebra: CliffordAlgebra, tower: FieldTower) -> CliffordAlgebra:
    return CliffordAlgebra(algebra.space.coerce(tower), [[tower.coerce(x) for x in b] for b in algebra.basis])


class CliffordElement:
    __slots__ = ('algebra', 'terms')

    def __init__(self, algebra: CliffordAlgebra, terms: Mapping[int, Scalar]) -> None:
        self.algebra = algebra
        self.terms: Dict[int, Scalar] = {m: c for m, c in terms.items() if not c.is_zero()}

    def _check(self, other: 'CliffordElement') -> None:
        if other.algebra != self.algebra:
            raise AlgebraMismatch('elements of different Clifford algebras')

    def coerce(self, algebra: CliffordAlgebra) -> 'CliffordElement':
        if algebra is self.algebra:
            return self
        if algebra.basis != tuple(tuple(algebra.tower.coerce(x) for x in b) for b in self.algebra.basis):
            raise AlgebraMismatch('cannot move element between unrelated Clifford algebras')
        return CliffordElement(algebra, {m: algebra.tower.coerce(c) for m, c in self.terms.items()})

    def __add__(self, other: 'CliffordElement') -> 'CliffordElement':
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return CliffordElement(self.algebra, terms)

    def __neg__(self) -> 'CliffordElement':
        return CliffordElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: 'CliffordElement') -> 'CliffordElement':
        return self + (-other)

    def __mul__(self, other: Union['CliffordElement', Scalar, int]) -> 'CliffordElement':
        if not isinstance(other, CliffordElement):
            return CliffordElement(self.algebra, {m: c * other for m, c in self.terms.items()})
        return cl_mul(self, other)

    def __rmul__(self, c: Union[Scalar, int]) -> 'CliffordElement':
        return CliffordElement(self.algebra, {m: c * x for m, x in self.terms.items()})

    def __truediv__(self, c: Union[Scalar, int]) -> 'CliffordElement':
        return CliffordElement(self.algebra, {m: x / c for m, x in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return 'CliffordElement(0)'
        parts = [f'({c})*b{m:b}' if m else f'({c})' for m, c in sorted(self.terms.items())]
        return 'CliffordElement(' + ' + '.join(parts) + ')'

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self) -> Optional[int]:
        """0 or 1 for homogeneous elements, None otherwise (and for 0)."""
        parities = {bin(m).count('1') % 2 for m in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def is_even(self) -> bool:
        return all(bin(m).count('1') % 2 == 0 for m in self.terms)

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self.terms)

    def scalar_part(self) -> Scalar:
        return self.terms.get(0, self.algebra.tower.zero())

    def transpose(self) -> 'CliffordElement':
        return cl_transpose(self)

    def inverse(self) -> 'CliffordElement':
        """Inverse of a Clifford-group element, xt / nu(x)."""
        n = nu(self)
        if n.is_zero():
            raise NotInvertible('element has zero spinor norm')
        return self.transpose() / n


def cl_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    x._check(y)
    algebra = x.algebra
    terms: Dict[int, Scalar] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            c = ca * cb
            common = a & b
            if common:
                c = c * algebra.square_factor(common)
            if monomial_sign(a, b) < 0:
                c = -c
            m = a ^ b
            terms[m] = terms[m] + c if m in terms else c
    return CliffordElement(algebra, terms)


def cl_transpose(x: CliffordElement) -> CliffordElement:
    return CliffordElement(x.algebra, {m: c if transpose_sign(m) > 0 else -c for m, c in x.terms.items()})


def nu(gamma: CliffordElement) -> Scalar:
    """gamma gamma^t, which is a scalar for Clifford-group elements."""
    product = gamma * gamma.transpose()
    if not product.is_scalar():
        raise NotScalar('gamma gamma^t is not a scalar')
    return product.scalar_part()


def pi_action(gamma: CliffordElement) -> Matrix:
    """Matrix on V of v -> (-1)^p(gamma) gamma v gamma^-1."""
    p = gamma.parity()
    if p is None:
        raise NotHomogeneous('element is zero or not homogeneous')
    algebra = gamma.algebra
    norm = gamma * gamma.transpose()
    if not norm.is_scalar():
        raise DoesNotNormalizeV('gamma gamma^t is not a scalar')
    if norm.scalar_part().is_zero():
        raise NotInvertible('element has zero spinor norm')
    inverse = gamma.transpose() / norm.scalar_part()

    columns = []
    for j in range(algebra.n):
        v = algebra.vector(tuple(algebra.tower(int(i == j)) for i in range(algebra.n)))
        w = gamma * v * inverse
        image = algebra.vector_part(w)
        if image is None:
            raise DoesNotNormalizeV('conjugation does not preserve V')
        columns.append(tuple(-x for x in image) if p else image)
    return Matrix.from_columns(algebra.tower, columns)


@dataclass(frozen=True)
class SpinLift:
    element: CliffordElement
    reflections: Tuple[Vector, ...]
    tower_extensions: Tuple[Scalar, ...]


def reflection_factors(g: Matrix, algebra: CliffordAlgebra) -> List[Vector]:
    """Anisotropic v_1..v_k with g = r_{v_1} ... r_{v_k}, fixing the orthogonal basis one vector at a time."""
    space = algebra.space
    h = g
    vectors: List[Vector] = []
    for x in algebra.basis:
        y = h.apply(x)
        if y == x:
            continue
        diff = tuple(a - b for a, b in zip(y, x))
        if not space.q(diff).is_zero():
            moves = [diff]
        else:
            # q(x + y) = 4 q(x) when q(y - x) = 0
            moves = [tuple(a + b for a, b in zip(x, y)), x]
        for v in moves:
            h = reflection(v, space) @ h
        vectors.extend(moves)
    assert h.is_identity()
    return vectors


def spin_lift(g: Matrix, algebra: CliffordAlgebra) -> SpinLift:
    """gamma in Spin(V) with pi_action(gamma) = g, for g in SO(V)."""
    space = algebra.space
    if g.tower != algebra.tower:
        if algebra.tower.embeds_into(g.tower):
            algebra = algebra.over(g.tower)
            space = algebra.space
        else:
            g = g.coerce(algebra.tower)
    similitude = isometry_class(g, space)
    if similitude.factor != 1 or not similitude.proper:
        raise NotProperIsometry('spin lifts exist only for elements of SO(V)')

    vectors = reflection_factors(g, algebra)
    gamma = algebra.product_of_vectors(vectors)
    norm = algebra.tower.one()
    for v in vectors:
        norm = norm * space.q(v)

    extensions = []
    root = try_sqrt(norm)
    if root is None:
        tower, root = sqrt_of(norm)
        extensions.append(norm)
        logger.debug('spin lift adjoined sqrt(%s)', norm)
        algebra = algebra.over(tower)
        gamma = gamma.coerce(algebra)
        root = tower.coerce(root)
    return SpinLift(element=gamma / root, reflections=tuple(vectors), tower_extensions=tuple(extensions))


def random_clifford_group_element(
        algebra: CliffordAlgebra,
        rng,
        factors: int,
        bound: int = 2
) -> Tuple[CliffordElement, List[Vector]]:
    """Product of ``factors`` random anisotropic vectors with small integer coordinates."""
    vectors = []
    while len(vectors) < factors:
        v = tuple(algebra.tower(rng.randint(-bound, bound)) for _ in range(algebra.n))
        if not algebra.space.q(v).is_zero():
            vectors.append(v)
    return algebra.product_of_vectors(vectors), vectors
