from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from g2lab.errors import TowerMismatch
from g2lab.scalars.field import FieldTower, Rational, Scalar


Coefficient = Union[Scalar, Rational]


class Poly:
    """Dense univariate polynomial over a FieldTower, coefficients lowest degree first.

    The zero polynomial has no coefficients and degree -1.
    """
    __slots__ = ('tower', 'coeffs')

    def __init__(self, tower: FieldTower, coeffs: Iterable[Coefficient]) -> None:
        coeffs = [tower(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.tower = tower
        self.coeffs: Tuple[Scalar, ...] = tuple(coeffs)

    @classmethod
    def t(cls, tower: FieldTower) -> 'Poly':
        return cls(tower, [0, 1])

    @classmethod
    def constant(cls, tower: FieldTower, c: Coefficient) -> 'Poly':
        return cls(tower, [c])

    @classmethod
    def from_roots(cls, tower: FieldTower, roots: Iterable[Coefficient]) -> 'Poly':
        p = cls.constant(tower, 1)
        for r in roots:
            p = p * cls(tower, [-tower(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Scalar:
        if self.is_zero():
            return self.tower.zero()
        return self.coeffs[-1]

    def coeff(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.tower.zero()

    def is_monic(self) -> bool:
        return not self.is_zero() and self.lc() == 1

    def monic(self) -> 'Poly':
        if self.is_zero():
            return self
        inv = self.lc().inverse()
        return Poly(self.tower, [c * inv for c in self.coeffs])

    def coerce(self, tower: FieldTower) -> 'Poly':
        return Poly(tower, [tower.coerce(c) for c in self.coeffs])

    def _other(self, other: Union['Poly', Coefficient]) -> 'Poly':
        if isinstance(other, Poly):
            if other.tower != self.tower:
                raise TowerMismatch(f'{self.tower!r} != {other.tower!r}')
            return other
        return Poly.constant(self.tower, other)

    def __add__(self, other: Union['Poly', Coefficient]) -> 'Poly':
        other = self._other(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.tower, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> 'Poly':
        return Poly(self.tower, [-c for c in self.coeffs])

    def __sub__(self, other: Union['Poly', Coefficient]) -> 'Poly':
        return self + (-self._other(other))

    def __rsub__(self, other: Coefficient) -> 'Poly':
        return self._other(other) - self

    def __mul__(self, other: Union['Poly', Coefficient]) -> 'Poly':
        other = self._other(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.tower, [])
        prod = [self.tower.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    prod[i + j] = prod[i + j] + a * b
        return Poly(self.tower, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'Poly':
        assert k >= 0
        result = Poly.constant(self.tower, 1)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: 'Poly') -> Tuple['Poly', 'Poly']:
        other = self._other(other)
        if other.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        rem = list(self.coeffs)
        quo = [self.tower.zero()] * max(len(rem) - other.degree, 0)
        inv = other.lc().inverse()
        for k in range(len(rem) - 1, other.degree - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            c = c * inv
            shift = k - other.degree
            quo[shift] = c
            for j, b in enumerate(other.coeffs):
                rem[shift + j] = rem[shift + j] - c * b
        return Poly(self.tower, quo), Poly(self.tower, rem[:other.degree])

    def __floordiv__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[0]

    def __mod__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.constant(self.tower, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x: Coefficient) -> Scalar:
        """Horner evaluation at a Scalar."""
        acc = self.tower.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_matrix(self, m: 'Matrix') -> 'Matrix':
        from g2lab.scalars.matrix import Matrix
        assert isinstance(m, Matrix)
        acc = Matrix.zeros(self.tower, m.rows, m.cols)
        ident = Matrix.identity(self.tower, m.rows)
        for c in reversed(self.coeffs):
            acc = acc @ m + ident * c
        return acc

    def derivative(self) -> 'Poly':
        return Poly(self.tower, [c * i for i, c in enumerate(self.coeffs)][1:])

    def gcd(self, other: 'Poly') -> 'Poly':
        """Monic gcd (zero if both are zero)."""
        a, b = self, self._other(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> 'Poly':
        if self.degree < 1:
            return self.monic()
        return (self // self.gcd(self.derivative())).monic()

    def resultant_with_square(self, c: Coefficient) -> Scalar:
        """Res(self, t^2 - c), which vanishes iff self has a root squaring to c.

        With self = E(t^2) + t O(t^2) this equals E(c)^2 - c O(c)^2.
        """
        c = self.tower(c)
        even = Poly(self.tower, self.coeffs[0::2])
        odd = Poly(self.tower, self.coeffs[1::2])
        return even(c) ** 2 - c * odd(c) ** 2

    def substitute_scaled(self, c: Coefficient) -> 'Poly':
        """p(c t)."""
        c = self.tower(c)
        power, out = self.tower.one(), []
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return Poly(self.tower, out)

    def reversed(self) -> 'Poly':
        """t^deg p(1/t)."""
        return Poly(self.tower, self.coeffs[::-1])

    def __repr__(self) -> str:
        if self.is_zero():
            return 'Poly(0)'
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            terms.append(f'({c})' + (f'*t^{i}' if i > 1 else '*t' if i == 1 else ''))
        return 'Poly(' + ' + '.join(reversed(terms)) + ')'


def poly_from_rationals(tower: FieldTower, coeffs_high_first: Sequence[Rational]) -> Poly:
    """Build a polynomial from coefficients listed from the leading one down."""
    return Poly(tower, list(reversed([Fraction(c) for c in coeffs_high_first])))


def root_multiplicity(p: Poly, root: Scalar) -> int:
    """Exact multiplicity of ``root`` as a root of nonzero ``p``."""
    assert not p.is_zero()
    linear = Poly(p.tower, [-p.tower(root), 1])
    k = 0
    while True:
        q, r = divmod(p, linear)
        if not r.is_zero():
            return k
        p, k = q, k + 1


def coefficient_list(p: Poly, length: int) -> List[Scalar]:
    return [p.coeff(i) for i in range(length)]
