import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from g2lab.errors import IsotropicVector, NotSimilitude, TowerMismatch
from g2lab.scalars import FieldTower, Matrix, Scalar, Vector, sqrt_of, try_sqrt


logger = logging.getLogger(__name__)


class QuadSpace:
    """Nondegenerate quadratic space given by the gram matrix of beta(x, y) = q(x + y) - q(x) - q(y)."""
    def __init__(self, gram: Optional[Matrix], tower: Optional[FieldTower] = None, check: bool = True) -> None:
        if gram is None:
            assert tower is not None
            self.tower, self.dim, self.gram = tower, 0, None
            return
        if check:
            if not gram.is_square or gram != gram.transpose():
                raise ValueError('gram matrix must be square and symmetric')
            if gram.det().is_zero():
                raise ValueError('quadratic space is degenerate')
        self.tower = gram.tower
        self.dim = gram.rows
        self.gram = gram

    def beta(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        acc = self.tower.zero()
        gy = self.gram.apply(y)
        for a, b in zip(x, gy):
            acc = acc + a * b
        return acc

    def q(self, x: Sequence[Scalar]) -> Scalar:
        return self.beta(x, x) / 2

    def basis(self) -> List[Vector]:
        return [tuple(self.tower(int(i == j)) for j in range(self.dim)) for i in range(self.dim)]

    def coerce(self, tower: FieldTower) -> 'QuadSpace':
        if tower == self.tower:
            return self
        if self.gram is None:
            return QuadSpace(None, tower)
        return QuadSpace(self.gram.coerce(tower), check=False)

    def restrict(self, vectors: Sequence[Sequence[Scalar]]) -> Matrix:
        """Gram matrix of beta on ``vectors``."""
        return Matrix(self.tower, [[self.beta(x, y) for y in vectors] for x in vectors])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadSpace):
            return NotImplemented
        return self.dim == other.dim and self.tower == other.tower and self.gram == other.gram

    def __repr__(self) -> str:
        return f'QuadSpace(dim={self.dim}, gram={self.gram!r})'


@dataclass(frozen=True)
class Similitude:
    factor: Scalar
    # None when the properness convention does not apply (odd dimension, factor != 1)
    proper: Optional[bool]


@dataclass(frozen=True)
class SubspaceFlag:
    basis: Tuple[Vector, ...]
    totally_isotropic: bool
    nondegenerate: bool

    @classmethod
    def of(cls, space: QuadSpace, vectors: Sequence[Sequence[Scalar]]) -> 'SubspaceFlag':
        vectors = tuple(tuple(space.tower(x) for x in v) for v in vectors)
        if vectors and Matrix(space.tower, vectors).rank() != len(vectors):
            raise ValueError('subspace basis is linearly dependent')
        if not vectors:
            return cls(basis=(), totally_isotropic=True, nondegenerate=True)
        gram = space.restrict(vectors)
        return cls(
            basis=vectors,
            totally_isotropic=gram.is_zero(),
            nondegenerate=not gram.det().is_zero(),
        )


@dataclass(frozen=True)
class Isometry:
    matrix: Matrix
    tower_extensions: Tuple[Scalar, ...] = field(default=())


def _default_tower(tower: Optional[FieldTower]) -> FieldTower:
    return tower if tower is not None else FieldTower(1)


def hyperbolic(r: int, tower: Optional[FieldTower] = None) -> QuadSpace:
    """H(k^r): basis (e1, f1, ..., er, fr) with beta(ei, fi) = 1."""
    tower = _default_tower(tower)
    if r < 0:
        raise ValueError(f'``r={r}`` is not supported')
    if r == 0:
        return QuadSpace(None, tower)
    n = 2 * r
    gram = [[0] * n for _ in range(n)]
    for i in range(r):
        gram[2 * i][2 * i + 1] = gram[2 * i + 1][2 * i] = 1
    return QuadSpace(Matrix(tower, gram), check=False)


def line(c, tower: Optional[FieldTower] = None) -> QuadSpace:
    """The line with q(x) = c x^2."""
    tower = _default_tower(tower)
    c = tower(c)
    if c.is_zero():
        raise ValueError('a line with q = 0 is degenerate')
    return QuadSpace(Matrix(tower, [[c * 2]]), check=False)


def orth_sum(a: QuadSpace, b: QuadSpace) -> QuadSpace:
    if a.tower != b.tower:
        raise TowerMismatch(f'{a.tower!r} != {b.tower!r}')
    if a.dim == 0:
        return b
    if b.dim == 0:
        return a
    return QuadSpace(Matrix.block_diag(a.tower, [a.gram, b.gram]), check=False)


def reference_space(tower: Optional[FieldTower] = None) -> QuadSpace:
    """E7 = H(k^3) + <1> in the basis (e1, f1, e2, f2, e3, f3, g)."""
    tower = _default_tower(tower)
    return orth_sum(hyperbolic(3, tower), line(1, tower))


def isometry_class(g: Matrix, space: QuadSpace) -> Similitude:
    if not g.is_square or g.rows != space.dim:
        raise ValueError(f'expected a {space.dim}x{space.dim} matrix')
    if space.tower.embeds_into(g.tower):
        gram = space.gram.coerce(g.tower)
    else:
        gram, g = space.gram, g.coerce(space.tower)
    image = g.transpose() @ gram @ g
    i, j = next((i, j) for i in range(space.dim) for j in range(space.dim) if not gram[i, j].is_zero())
    factor = image[i, j] / gram[i, j]
    if factor.is_zero() or image != gram * factor:
        raise NotSimilitude('matrix does not scale the bilinear form')
    det = g.det()
    if factor == 1:
        proper = det == 1
    elif space.dim % 2 == 0:
        proper = det == factor ** (space.dim // 2)
    else:
        proper = None
    return Similitude(factor=factor, proper=proper)


def reflection(v: Sequence[Scalar], space: QuadSpace) -> Matrix:
    """r_v: x -> x - beta(x, v) / q(v) v."""
    v = tuple(space.tower(x) for x in v)
    qv = space.q(v)
    if qv.is_zero():
        raise IsotropicVector('cannot reflect in an isotropic vector')
    gv = space.gram.apply(v)
    n = space.dim
    return Matrix(space.tower, [
        [int(i == j) - v[i] * gv[j] / qv for j in range(n)]
        for i in range(n)
    ])


def congruence_diagonalize(space: QuadSpace) -> Tuple[List[Vector], List[Scalar]]:
    """Orthogonal basis (b_i) with q(b_i) != 0, found without square roots."""
    remaining = space.basis()
    basis, values = [], []
    while remaining:
        index = next((i for i, w in enumerate(remaining) if not space.q(w).is_zero()), None)
        if index is None:
            i, j = next(
                (i, j) for i in range(len(remaining)) for j in range(i + 1, len(remaining))
                if not space.beta(remaining[i], remaining[j]).is_zero()
            )
            remaining[i] = tuple(a + b for a, b in zip(remaining[i], remaining[j]))
            index = i
        u = remaining.pop(index)
        qu = space.q(u)
        basis.append(u)
        values.append(qu)
        projected = []
        for w in remaining:
            c = space.beta(w, u) / (qu * 2)
            projected.append(tuple(a - c * b for a, b in zip(w, u)))
        remaining = projected
    return basis, values


def find_isometry(source: QuadSpace, target: QuadSpace) -> Isometry:
    """A matrix T with beta_target(Tx, Ty) = beta_source(x, y), adjoining square roots when needed."""
    if source.dim != target.dim:
        raise ValueError('spaces of different dimensions are not isometric')
    if source.tower != target.tower:
        raise TowerMismatch(f'{source.tower!r} != {target.tower!r}')
    src_basis, src_values = congruence_diagonalize(source)
    dst_basis, dst_values = congruence_diagonalize(target)

    tower = target.tower
    unused = list(range(target.dim))
    images, ratios, extensions = [None] * source.dim, [None] * source.dim, []
    for i, a in enumerate(src_values):
        match = next((j for j in unused if try_sqrt(tower(a) / dst_values[j]) is not None), unused[0])
        unused.remove(match)
        images[i], ratios[i] = match, tower(a) / dst_values[match]

    scales = []
    for ratio in ratios:
        root = try_sqrt(tower.coerce(ratio))
        if root is None:
            tower, root = sqrt_of(tower.coerce(ratio))
            extensions.append(ratio)
            logger.debug('find_isometry adjoined sqrt(%s)', ratio)
        scales.append(root)

    columns = [tuple(tower.coerce(x) * tower.coerce(c) for x in dst_basis[j]) for j, c in zip(images, scales)]
    image = Matrix.from_columns(tower, columns)
    src = Matrix.from_columns(tower, [tuple(tower.coerce(x) for x in b) for b in src_basis])
    return Isometry(matrix=image @ src.inverse(), tower_extensions=tuple(extensions))
