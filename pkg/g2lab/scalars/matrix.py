from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from g2lab.errors import NonSquareMatrix, NotInvertible, TowerMismatch
from g2lab.scalars.field import FieldTower, Rational, Scalar
from g2lab.scalars.poly import Poly


Vector = Tuple[Scalar, ...]
Entry = Union[Scalar, Rational]


class Matrix:
    """Immutable dense matrix of Scalars, row-major."""
    __slots__ = ('tower', 'rows', 'cols', 'entries', '_key')

    def __init__(self, tower: FieldTower, entries: Sequence[Sequence[Entry]]) -> None:
        rows = tuple(tuple(tower(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError('matrix dimensions must be positive')
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError('ragged matrix rows')
        self.tower = tower
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.entries: Tuple[Vector, ...] = rows
        self._key = None

    # constructors

    @classmethod
    def identity(cls, tower: FieldTower, n: int) -> 'Matrix':
        return cls.diag(tower, [1] * n)

    @classmethod
    def zeros(cls, tower: FieldTower, rows: int, cols: int) -> 'Matrix':
        zero = tower.zero()
        return cls(tower, [[zero] * cols for _ in range(rows)])

    @classmethod
    def diag(cls, tower: FieldTower, values: Sequence[Entry]) -> 'Matrix':
        n = len(values)
        zero = tower.zero()
        return cls(tower, [[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, tower: FieldTower, columns: Sequence[Sequence[Entry]]) -> 'Matrix':
        return cls(tower, list(zip(*columns)))

    @classmethod
    def block_diag(cls, tower: FieldTower, blocks: Sequence['Matrix']) -> 'Matrix':
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[tower.zero()] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r + i][c + j] = b[i, j]
            r, c = r + b.rows, c + b.cols
        return cls(tower, out)

    @classmethod
    def companion(cls, p: Poly) -> 'Matrix':
        """Companion matrix of monic ``p``; its characteristic polynomial is ``p``."""
        assert p.is_monic() and p.degree >= 1
        n = p.degree
        out = [[p.tower.zero()] * n for _ in range(n)]
        for i in range(1, n):
            out[i][i - 1] = p.tower.one()
        for i in range(n):
            out[i][n - 1] = -p.coeff(i)
        return cls(p.tower, out)

    # access

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def block(self, r0: int, r1: int, c0: int, c1: int) -> 'Matrix':
        return Matrix(self.tower, [row[c0:c1] for row in self.entries[r0:r1]])

    def coerce(self, tower: FieldTower) -> 'Matrix':
        if tower == self.tower:
            return self
        return Matrix(tower, [[tower.coerce(x) for x in row] for row in self.entries])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def key(self) -> tuple:
        """Canonical exact serialization, used as a dictionary key."""
        if self._key is None:
            self._key = tuple((x.num, x.den) for row in self.entries for x in row)
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if self.tower == other.tower:
            return self.key() == other.key()
        return all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        body = '; '.join(', '.join(str(x) for x in row) for row in self.entries)
        return f'Matrix([{body}])'

    # arithmetic

    def _check(self, other: 'Matrix') -> None:
        if other.tower != self.tower:
            raise TowerMismatch(f'{self.tower!r} != {other.tower!r}')

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check(other)
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(self.tower, [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check(other)
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(self.tower, [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self) -> 'Matrix':
        return Matrix(self.tower, [[-a for a in row] for row in self.entries])

    def __mul__(self, c: Entry) -> 'Matrix':
        """Scalar multiple; use ``@`` for the matrix product."""
        if isinstance(c, Matrix):
            raise TypeError('use @ for matrix products')
        return Matrix(self.tower, [[a * c for a in row] for row in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f'cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}')
        zero = self.tower.zero()
        out = []
        other_rows = other.entries
        for row in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if a.is_zero():
                    continue
                for j, b in enumerate(other_rows[k]):
                    if not b.is_zero():
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(self.tower, out)

    def apply(self, v: Sequence[Entry]) -> Vector:
        assert len(v) == self.cols
        v = [self.tower(x) for x in v]
        out = []
        for row in self.entries:
            acc = self.tower.zero()
            for a, b in zip(row, v):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, k: int) -> 'Matrix':
        if not self.is_square:
            raise NonSquareMatrix(f'{self.rows}x{self.cols}')
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Matrix.identity(self.tower, self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> 'Matrix':
        return Matrix(self.tower, list(zip(*self.entries)))

    @property
    def T(self) -> 'Matrix':
        return self.transpose()

    def trace(self) -> Scalar:
        if not self.is_square:
            raise NonSquareMatrix(f'{self.rows}x{self.cols}')
        acc = self.tower.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def kron(self, other: 'Matrix') -> 'Matrix':
        self._check(other)
        out = []
        for ra in self.entries:
            for rb in other.entries:
                out.append([a * b for a in ra for b in rb])
        return Matrix(self.tower, out)

    def is_identity(self) -> bool:
        return self.is_square and self.is_scalar() and self.entries[0][0] == 1

    def is_scalar(self) -> bool:
        if not self.is_square:
            return False
        c = self.entries[0][0]
        return all(
            (x == c) if i == j else x.is_zero()
            for i, row in enumerate(self.entries) for j, x in enumerate(row)
        )

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    # elimination

    def rref(self) -> Tuple['Matrix', List[int]]:
        """Reduced row echelon form and pivot columns."""
        rows = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if not rows[i][c].is_zero()), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [x * inv for x in rows[r]]
            for i in range(self.rows):
                if i != r and not rows[i][c].is_zero():
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(self.tower, rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Scalar:
        if not self.is_square:
            raise NonSquareMatrix(f'{self.rows}x{self.cols}')
        rows = [list(row) for row in self.entries]
        n = self.rows
        det = self.tower.one()
        for c in range(n):
            pivot = next((i for i in range(c, n) if not rows[i][c].is_zero()), None)
            if pivot is None:
                return self.tower.zero()
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c].inverse()
            for i in range(c + 1, n):
                if not rows[i][c].is_zero():
                    f = rows[i][c] * inv
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
        return det

    def inverse(self) -> 'Matrix':
        if not self.is_square:
            raise NonSquareMatrix(f'{self.rows}x{self.cols}')
        n = self.rows
        ident = Matrix.identity(self.tower, n)
        augmented = Matrix(self.tower, [ra + rb for ra, rb in zip(self.entries, ident.entries)])
        reduced, pivots = augmented.rref()
        if pivots[:n] != list(range(n)):
            raise NotInvertible('singular matrix')
        return reduced.block(0, n, n, 2 * n)

    def solve(self, b: Sequence[Entry]) -> Optional[Vector]:
        """Some solution x of self x = b, or None."""
        augmented = Matrix(self.tower, [list(row) + [self.tower(y)] for row, y in zip(self.entries, b)])
        reduced, pivots = augmented.rref()
        if self.cols in pivots:
            return None
        x = [self.tower.zero()] * self.cols
        for i, c in enumerate(pivots):
            x[c] = reduced[i, self.cols]
        return tuple(x)

    def charpoly(self) -> Poly:
        return charpoly(self)


def charpoly(m: Matrix) -> Poly:
    """det(t - M) by Berkowitz's division-free recursion on leading principal submatrices."""
    if not m.is_square:
        raise NonSquareMatrix(f'{m.rows}x{m.cols}')
    tower = m.tower
    one = tower.one()
    a = m.entries
    # coefficients highest degree first
    poly = [one, -a[0][0]]
    for k in range(1, m.rows):
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        toeplitz = [one, -a[k][k]]
        v = col
        for _ in range(k):
            acc = tower.zero()
            for x, y in zip(row, v):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            toeplitz.append(-acc)
            v = [_dot(a[i][:k], v) for i in range(k)]
        poly = [
            _sum(toeplitz[r - i] * poly[i] for i in range(len(poly)) if 0 <= r - i < len(toeplitz))
            for r in range(k + 2)
        ]
    return Poly(tower, list(reversed(poly)))


def _dot(x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
    acc = x[0] * 0
    for a, b in zip(x, y):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc


def _sum(values: Iterable[Scalar]) -> Scalar:
    values = list(values)
    acc = values[0]
    for x in values[1:]:
        acc = acc + x
    return acc


def kernel_basis(m: Matrix) -> List[Vector]:
    """Basis of the right kernel, one vector per free column."""
    reduced, pivots = m.rref()
    tower = m.tower
    basis = []
    for free in range(m.cols):
        if free in pivots:
            continue
        v = [tower.zero()] * m.cols
        v[free] = tower.one()
        for i, c in enumerate(pivots):
            v[c] = -reduced[i, free]
        basis.append(tuple(v))
    return basis


def image_basis(m: Matrix) -> List[Vector]:
    """Basis of the column space, taken from the pivot columns of ``m``."""
    _, pivots = m.rref()
    return [m.column(c) for c in pivots]


def span_basis(tower: FieldTower, vectors: Sequence[Sequence[Entry]]) -> List[Vector]:
    """Echelon basis of the span of ``vectors``."""
    if not vectors:
        return []
    reduced, pivots = Matrix(tower, vectors).rref()
    return [reduced.row(i) for i in range(len(pivots))]


def intersect_kernels(matrices: Sequence[Matrix]) -> List[Vector]:
    """Common right kernel of matrices with equal column counts."""
    stacked = [row for m in matrices for row in m.entries]
    return kernel_basis(Matrix(matrices[0].tower, stacked))


def rank_mod_p(rows: Sequence[Sequence[Rational]], p: int = 2 ** 31 - 1) -> int:
    """Rank of a rational matrix reduced modulo ``p``; a lower bound for its rank over Q."""
    work = []
    for row in rows:
        reduced = []
        for x in row:
            x = Fraction(x)
            if x.denominator % p == 0:
                raise ValueError(f'denominator divisible by {p}')
            reduced.append(x.numerator * pow(x.denominator, -1, p) % p)
        work.append(reduced)
    rank = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][c], -1, p)
        pivot_row = [x * inv % p for x in work[rank]]
        work[rank] = pivot_row
        for i in range(rank + 1, len(work)):
            f = work[i][c]
            if f:
                work[i] = [(x - f * y) % p for x, y in zip(work[i], pivot_row)]
        rank += 1
    return rank


def vector_add(x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vector_scale(x: Sequence[Scalar], c: Entry) -> Vector:
    return tuple(a * c for a in x)


def is_zero_vector(x: Sequence[Scalar]) -> bool:
    return all(a.is_zero() for a in x)
