"""Split octonions in the Zorn vector-matrix model and the spinor machinery built on them.

Coordinates of C are ordered (a, u1, u2, u3, v1, v2, v3, b) with q = ab - <u, v> and
unit e = (1, 0, 0, 0, 0, 0, 0, 1).  The pure space P = e^perp uses the basis
(u1, v1, u2, v2, u3, v3, a - b), whose gram matrix is -1 times the gram matrix of
the reference space, so matrices in SO(E7) act on P in the same coordinates.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from g2lab.errors import (
    AlgebraMismatch, NotAutomorphism, NotEvenOrNotCliffordGroup, NotScalar
)
from g2lab.geometry.clifford import CliffordAlgebra, CliffordElement, nu, pi_action, transpose_sign
from g2lab.geometry.quadspace import QuadSpace, isometry_class, reference_space
from g2lab.scalars import FieldTower, Matrix, Scalar, Vector, intersect_kernels, rank_mod_p


logger = logging.getLogger(__name__)

# (a, u, v, b) positions in the coordinate vector
A, U, V, B = 0, slice(1, 4), slice(4, 7), 7

SparseMatrix = Dict[Tuple[int, int], Fraction]


def _dot(x, y):
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]


def _cross(x, y):
    return (x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0])


def zorn_product(x: Sequence, y: Sequence) -> tuple:
    """(a,u,v,b)(a',u',v',b') = (aa' + u.v', au' + b'u + v x v', a'v + bv' - u x u', bb' + v.u')."""
    a, u, v, b = x[A], x[U], x[V], x[B]
    a2, u2, v2, b2 = y[A], y[U], y[V], y[B]
    vv = _cross(v, v2)
    uu = _cross(u, u2)
    first = a * a2 + _dot(u, v2)
    top = tuple(a * p + b2 * r + s for p, r, s in zip(u2, u, vv))
    bottom = tuple(a2 * p + b * r - s for p, r, s in zip(v, v2, uu))
    last = b * b2 + _dot(v, u2)
    return (first,) + top + bottom + (last,)


def zorn_conjugate(x: Sequence) -> tuple:
    return (x[B],) + tuple(-c for c in x[U]) + tuple(-c for c in x[V]) + (x[A],)


def _unit_vector(i: int, n: int = 8) -> Tuple[Fraction, ...]:
    return tuple(Fraction(int(i == j)) for j in range(n))


OCTONION_GRAM = (
    (0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, -1, 0, 0, 0),
    (0, 0, 0, 0, 0, -1, 0, 0),
    (0, 0, 0, 0, 0, 0, -1, 0),
    (0, -1, 0, 0, 0, 0, 0, 0),
    (0, 0, -1, 0, 0, 0, 0, 0),
    (0, 0, 0, -1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0, 0, 0),
)

# pure basis (u1, v1, u2, v2, u3, v3, a - b) in C coordinates
PURE_BASIS = tuple(
    tuple(Fraction(x) for x in row) for row in (
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (1, 0, 0, 0, 0, 0, 0, -1),
    )
)

# orthogonal anisotropic basis of P in P coordinates: u_i + v_i, u_i - v_i, a - b
PURE_ORTHOGONAL_BASIS = (
    (1, 1, 0, 0, 0, 0, 0),
    (1, -1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0),
    (0, 0, 1, -1, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 0),
    (0, 0, 0, 0, 1, -1, 0),
    (0, 0, 0, 0, 0, 0, 1),
)


def _pure_to_c(p: Sequence) -> tuple:
    return tuple(sum(c * row[j] for c, row in zip(p, PURE_BASIS)) for j in range(8))


class Octonion:
    __slots__ = ('algebra', 'coords')

    def __init__(self, algebra: 'OctonionAlgebra', coords: Sequence) -> None:
        if len(coords) != 8:
            raise ValueError(f'an octonion has 8 coordinates, got {len(coords)}')
        self.algebra = algebra
        self.coords: Vector = tuple(algebra.tower(c) for c in coords)

    @property
    def a(self) -> Scalar:
        return self.coords[A]

    @property
    def u(self) -> Vector:
        return self.coords[U]

    @property
    def v(self) -> Vector:
        return self.coords[V]

    @property
    def b(self) -> Scalar:
        return self.coords[B]

    def _check(self, other: 'Octonion') -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatch('octonions from different algebras')

    def __add__(self, other: 'Octonion') -> 'Octonion':
        self._check(other)
        return Octonion(self.algebra, [x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other: 'Octonion') -> 'Octonion':
        self._check(other)
        return Octonion(self.algebra, [x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self) -> 'Octonion':
        return Octonion(self.algebra, [-x for x in self.coords])

    def __mul__(self, other) -> 'Octonion':
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return Octonion(self.algebra, [x * other for x in self.coords])

    def __rmul__(self, c) -> 'Octonion':
        return Octonion(self.algebra, [c * x for x in self.coords])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return 'Octonion(' + ', '.join(str(c) for c in self.coords) + ')'

    def conjugate(self) -> 'Octonion':
        return Octonion(self.algebra, zorn_conjugate(self.coords))

    def q(self) -> Scalar:
        return self.a * self.b - _dot(self.u, self.v)

    def inverse(self) -> 'Octonion':
        n = self.q()
        if n.is_zero():
            raise ZeroDivisionError('isotropic octonions are not invertible')
        return self.conjugate() * n.inverse()

    def is_pure(self) -> bool:
        return (self.a + self.b).is_zero()


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    x._check(y)
    return Octonion(x.algebra, zorn_product(x.coords, y.coords))


class PureSpace:
    def __init__(self, algebra: 'OctonionAlgebra') -> None:
        tower = algebra.tower
        self.algebra = algebra
        self.space = QuadSpace(reference_space(tower).gram * -1, check=False)
        self.basis_in_c: Tuple[Vector, ...] = tuple(tuple(tower(x) for x in row) for row in PURE_BASIS)
        self.orthogonal_basis: Tuple[Vector, ...] = tuple(
            tuple(tower(x) for x in row) for row in PURE_ORTHOGONAL_BASIS
        )
        self.clifford = CliffordAlgebra(self.space, self.orthogonal_basis)

    def to_c(self, p: Sequence[Scalar]) -> Vector:
        return tuple(self.algebra.tower(x) for x in _pure_to_c(p))

    def from_c(self, x: Sequence[Scalar]) -> Vector:
        if not (x[A] + x[B]).is_zero():
            raise ValueError('octonion is not pure')
        return (x[1], x[4], x[2], x[5], x[3], x[6], x[A])

    def octonion(self, p: Sequence[Scalar]) -> Octonion:
        return Octonion(self.algebra, self.to_c(p))


class OctonionAlgebra:
    def __init__(self, tower: Optional[FieldTower] = None) -> None:
        self.tower = tower if tower is not None else FieldTower(1)
        self.space = QuadSpace(Matrix(self.tower, OCTONION_GRAM), check=False)
        self.e = Octonion(self, (1, 0, 0, 0, 0, 0, 0, 1))
        self.pure = PureSpace(self)
        # C(C) over the basis (e, orthogonal basis of P), so C(P) sits inside by a one bit shift
        self.clifford = CliffordAlgebra(
            self.space, [self.e.coords] + [self.pure.to_c(p) for p in self.pure.orthogonal_basis]
        )
        self.conjugation = Matrix.from_columns(self.tower, [zorn_conjugate(c) for c in self.basis_vectors()])

    def __repr__(self) -> str:
        return f'OctonionAlgebra({self.tower!r})'

    def element(self, coords: Sequence) -> Octonion:
        return Octonion(self, coords)

    def from_parts(self, a, u: Sequence, v: Sequence, b) -> Octonion:
        return Octonion(self, [a, *u, *v, b])

    def basis_vectors(self) -> List[Vector]:
        return [tuple(self.tower(x) for x in _unit_vector(i)) for i in range(8)]

    def basis(self) -> List[Octonion]:
        return [Octonion(self, c) for c in self.basis_vectors()]

    def beta(self, x: Octonion, y: Octonion) -> Scalar:
        return self.space.beta(x.coords, y.coords)

    def left_matrix(self, x: Octonion) -> Matrix:
        """Matrix of y -> x y."""
        return Matrix.from_columns(self.tower, [zorn_product(x.coords, c) for c in self.basis_vectors()])

    def apply(self, t: Matrix, x: Octonion) -> Octonion:
        return Octonion(self, t.apply(x.coords))


@lru_cache(maxsize=None)
def octonions(tower: Optional[FieldTower] = None) -> OctonionAlgebra:
    return OctonionAlgebra(tower)


def _left_fractions(x: Sequence[Fraction]) -> List[List[Fraction]]:
    columns = [zorn_product(x, _unit_vector(j)) for j in range(8)]
    return [[columns[j][i] for j in range(8)] for i in range(8)]


def _ell_fractions(x: Sequence[Fraction]) -> SparseMatrix:
    """Sparse matrix of (a, b) -> (x b, conj(x) a) on C + C."""
    left = _left_fractions(x)
    left_bar = _left_fractions(zorn_conjugate(x))
    out = {}
    for i in range(8):
        for j in range(8):
            if left[i][j]:
                out[i, 8 + j] = left[i][j]
            if left_bar[i][j]:
                out[8 + i, j] = left_bar[i][j]
    return out


def _sparse_mul(x: SparseMatrix, y: SparseMatrix) -> SparseMatrix:
    rows: Dict[int, List[Tuple[int, Fraction]]] = {}
    for (k, j), c in y.items():
        rows.setdefault(k, []).append((j, c))
    out: Dict[Tuple[int, int], Fraction] = {}
    for (i, k), a in x.items():
        for j, c in rows.get(k, ()):
            out[i, j] = out.get((i, j), 0) + a * c
    return {key: c for key, c in out.items() if c}


@lru_cache(maxsize=None)
def ell_monomials() -> Tuple[SparseMatrix, ...]:
    """ell of the 256 monomials of C(C) over the basis (e, orthogonal basis of P), as rational sparse matrices."""
    generators = [(Fraction(1),) + (Fraction(0),) * 6 + (Fraction(1),)]
    generators += [tuple(Fraction(x) for x in _pure_to_c(p)) for p in PURE_ORTHOGONAL_BASIS]
    ells = [_ell_fractions(c) for c in generators]
    table: List[SparseMatrix] = [{(i, i): Fraction(1) for i in range(16)}]
    for mask in range(1, 256):
        low = (mask & -mask).bit_length() - 1
        table.append(_sparse_mul(ells[low], table[mask ^ (1 << low)]))
    return tuple(table)


def ell_generator(x: Octonion) -> Matrix:
    """16x16 matrix of ell(x): (a, b) -> (x b, conj(x) a)."""
    tower = x.algebra.tower
    left = x.algebra.left_matrix(x)
    left_bar = x.algebra.left_matrix(x.conjugate())
    zero = tower.zero()
    rows = [[zero] * 16 for _ in range(16)]
    for i in range(8):
        for j in range(8):
            rows[i][8 + j] = left[i, j]
            rows[8 + i][j] = left_bar[i, j]
    return Matrix(tower, rows)


@dataclass(frozen=True)
class EllIsoReport:
    rank: int
    graded: bool
    dependent_mask: Optional[int]

    @property
    def passed(self) -> bool:
        return self.rank == 256 and self.graded


def ell_iso_check() -> EllIsoReport:
    """Certify that ell extends to an isomorphism of graded algebras C(C) -> End(C + C)."""
    table = ell_monomials()
    graded = True
    for mask, m in enumerate(table):
        odd = bin(mask).count('1') % 2
        for i, j in m:
            if ((i < 8) != (j < 8)) != bool(odd):
                graded = False
    rows = [[m.get((i, j), 0) for i in range(16) for j in range(16)] for m in table]
    rank = rank_mod_p(rows)
    dependent = None
    if rank < 256:
        for k in range(1, 257):
            if rank_mod_p(rows[:k]) < k:
                dependent = k - 1
                break
    logger.debug('ell images have rank %d, graded=%s', rank, graded)
    return EllIsoReport(rank=rank, graded=graded, dependent_mask=dependent)


def embed_pure(gamma: CliffordElement) -> CliffordElement:
    """The inclusion C(P) -> C(C)."""
    algebra = octonions(gamma.algebra.tower)
    if gamma.algebra != algebra.pure.clifford:
        raise AlgebraMismatch('element does not belong to C(P)')
    return CliffordElement(algebra.clifford, {m << 1: c for m, c in gamma.terms.items()})


def restrict_pure(gamma: CliffordElement) -> CliffordElement:
    """Inverse of embed_pure on its image."""
    algebra = octonions(gamma.algebra.tower)
    if gamma.algebra != algebra.clifford:
        raise AlgebraMismatch('element does not belong to C(C)')
    if any(m & 1 for m in gamma.terms):
        raise ValueError('element involves the unit e')
    return CliffordElement(algebra.pure.clifford, {m >> 1: c for m, c in gamma.terms.items()})


def _as_octonion_clifford(gamma: CliffordElement) -> CliffordElement:
    algebra = octonions(gamma.algebra.tower)
    if gamma.algebra == algebra.clifford:
        return gamma
    return embed_pure(gamma)


def ell_image(gamma: CliffordElement) -> Matrix:
    """ell(gamma) for gamma in C(C) or C(P)."""
    gamma = _as_octonion_clifford(gamma)
    tower = gamma.algebra.tower
    table = ell_monomials()
    acc: Dict[Tuple[int, int], Scalar] = {}
    for mask, c in gamma.terms.items():
        for key, x in table[mask].items():
            term = c * x
            acc[key] = acc[key] + term if key in acc else term
    zero = tower.zero()
    return Matrix(tower, [[acc.get((i, j), zero) for j in range(16)] for i in range(16)])


def _check_gspin(gamma: CliffordElement) -> CliffordElement:
    gamma = _as_octonion_clifford(gamma)
    if not gamma.is_even():
        raise NotEvenOrNotCliffordGroup('spinor representation needs an even element')
    try:
        if nu(gamma).is_zero():
            raise NotEvenOrNotCliffordGroup('element has zero spinor norm')
    except NotScalar as e:
        raise NotEvenOrNotCliffordGroup('element is not in the Clifford group') from e
    return gamma


def spin_rep(gamma: CliffordElement) -> Matrix:
    """rho(gamma) on W0 = C: the upper-left block of ell(gamma)."""
    return ell_image(_check_gspin(gamma)).block(0, 8, 0, 8)


def spin_rep_odd(gamma: CliffordElement) -> Matrix:
    """The lower-right block of ell(gamma), read on C through conjugation."""
    gamma = _check_gspin(gamma)
    kappa = octonions(gamma.algebra.tower).conjugation
    return kappa @ ell_image(gamma).block(8, 16, 8, 16) @ kappa


def spin_rep_from_vectors(vectors: Sequence[Octonion]) -> Matrix:
    """a -> v1(conj(v2)(v3(conj(v4) a)))..., the spinor action of v1 v2 ... v_2k computed directly."""
    if len(vectors) % 2:
        raise NotEvenOrNotCliffordGroup('an even number of vectors is required')
    algebra = vectors[0].algebra
    acc = Matrix.identity(algebra.tower, 8)
    for i, v in enumerate(vectors):
        acc = acc @ algebra.left_matrix(v if i % 2 == 0 else v.conjugate())
    return acc


def _octonion_space(t: Matrix) -> OctonionAlgebra:
    if not t.is_square or t.rows != 8:
        raise ValueError('expected an 8x8 matrix')
    return octonions(t.tower)


def _largest_tower(matrices: Sequence[Matrix]) -> FieldTower:
    tower = matrices[0].tower
    for m in matrices[1:]:
        if not m.tower.embeds_into(tower):
            tower = m.tower
    return tower


def is_related_triple(t1: Matrix, t2: Matrix, t3: Matrix) -> bool:
    """t1(xy) = t2(x) t3(y) for all octonions x, y, with t1 in SO(C) and t2, t3 in GSO(C)."""
    tower = _largest_tower([t1, t2, t3])
    t1, t2, t3 = (t.coerce(tower) for t in (t1, t2, t3))
    algebra = _octonion_space(t1)
    first = isometry_class(t1, algebra.space)
    if first.factor != 1 or not first.proper:
        return False
    if not all(isometry_class(t, algebra.space).proper for t in (t2, t3)):
        return False
    basis = algebra.basis_vectors()
    left, right = t2.columns(), t3.columns()
    return all(
        t1.apply(zorn_product(basis[i], basis[j])) == zorn_product(left[i], right[j])
        for i in range(8) for j in range(8)
    )


def is_g2_automorphism(t: Matrix) -> bool:
    algebra = _octonion_space(t)
    if t.det().is_zero():
        return False
    if t.apply(algebra.e.coords) != algebra.e.coords:
        return False
    basis = algebra.basis_vectors()
    columns = t.columns()
    for i in range(8):
        for j in range(8):
            if t.apply(zorn_product(basis[i], basis[j])) != zorn_product(columns[i], columns[j]):
                return False
    return True


@dataclass(frozen=True)
class G2SpinLift:
    element: CliffordElement
    pure_element: CliffordElement


def g2_spin_lift(phi: Matrix) -> G2SpinLift:
    """The even gamma in C(C) with ell(gamma) = diag(phi, phi), and its image in Spin(P)."""
    if not is_g2_automorphism(phi):
        raise NotAutomorphism('matrix is not an automorphism of the octonions')
    algebra = octonions(phi.tower)
    clifford = algebra.clifford
    table = ell_monomials()
    terms = {}
    for pure_mask in range(128):
        if bin(pure_mask).count('1') % 2:
            continue
        mask = pure_mask << 1
        # trace of ell(b_S) diag(phi, phi)
        trace = algebra.tower.zero()
        for (i, j), x in table[mask].items():
            if (i < 8) == (j < 8):
                trace = trace + phi[j % 8, i % 8] * x
        if trace.is_zero():
            continue
        # b_S^-1 = sign b_S / prod d_i
        terms[mask] = trace * transpose_sign(mask) / (clifford.square_factor(mask) * 16)
    gamma = CliffordElement(clifford, terms)
    assert ell_image(gamma) == Matrix.block_diag(algebra.tower, [phi, phi])
    assert nu(gamma) == 1
    assert pi_action(gamma) == phi
    return G2SpinLift(element=gamma, pure_element=restrict_pure(gamma))


def fixed_anisotropic_spinor(matrices: Sequence[Matrix]) -> Optional[Vector]:
    """A common fixed vector of the matrices with q != 0, or None when the fixed space is totally isotropic."""
    if not matrices:
        raise ValueError('at least one matrix is required')
    tower = _largest_tower(matrices)
    algebra = octonions(tower)
    identity = Matrix.identity(tower, 8)
    fixed = intersect_kernels([m.coerce(tower) - identity for m in matrices])
    if not fixed:
        return None
    space = algebra.space
    for v in fixed:
        if not space.q(v).is_zero():
            return v
    for i in range(len(fixed)):
        for j in range(i + 1, len(fixed)):
            w = tuple(x + y for x, y in zip(fixed[i], fixed[j]))
            if not space.q(w).is_zero():
                return w
    # every vector and pairwise sum is isotropic, so the restricted form vanishes
    assert space.restrict(fixed).is_zero()
    return None


def so_from_spinor(r: Matrix) -> Matrix:
    """pi(gamma) on P in pure coordinates from rho(gamma) = r, via x -> r(x) r(e)^-1."""
    algebra = _octonion_space(r)
    pure = algebra.pure
    image_of_unit = algebra.apply(r, algebra.e).inverse()
    columns = []
    for p in pure.space.basis():
        x = algebra.apply(r, pure.octonion(p)) * image_of_unit
        columns.append(pure.from_c(x.coords))
    return Matrix.from_columns(algebra.tower, columns)


def torus_spin_element(x0: Scalar, l1: Scalar, l2: Scalar, l3: Scalar) -> CliffordElement:
    """x0 s(l1) s(l2) s(l3) in C(P), with s(l) = l e + l^-1 f for the idempotents e = -uv, f = -vu of each hyperbolic pair."""
    tower = x0.tower
    for value in (l1, l2, l3):
        tower = tower if value.tower.embeds_into(tower) else value.tower
    clifford = octonions(tower).pure.clifford
    acc = clifford.scalar(tower.coerce(x0))
    for i, value in enumerate((l1, l2, l3)):
        value = tower.coerce(value)
        u = clifford.vector([tower(int(j == 2 * i)) for j in range(7)])
        v = clifford.vector([tower(int(j == 2 * i + 1)) for j in range(7)])
        e = -(u * v)
        f = -(v * u)
        acc = acc * (e * value + f * value.inverse())
    return acc
