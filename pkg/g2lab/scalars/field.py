"""Exact arithmetic in towers Q(zeta_m)(sqrt d_1, ..., sqrt d_s).

A Scalar is stored as integer numerators over one positive common
denominator, in the basis zeta^a * prod sqrt(d_i)^eps_i with flat index
a + phi(m) * mask. The top sqrt level splits the vector into halves
x0 + x1 * sqrt(d_s).
"""
import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import Poly as SympyPoly, Symbol, cyclotomic_poly, totient
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_invert, dup_resultant

from g2lab.config import TOWER_DEPTH_CAP
from g2lab.errors import TowerDepthExceeded, TowerMismatch, ZeroDivisorDetected


Rational = Union[int, Fraction]
IntVector = Tuple[int, ...]

_t = Symbol('t')


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> IntVector:
    """Coefficients of Phi_m, lowest degree first."""
    coeffs = SympyPoly(cyclotomic_poly(m, _t), _t).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _reduce(coeffs: List[int], modulus: IntVector) -> IntVector:
    n = len(modulus) - 1
    for k in range(len(coeffs) - 1, n - 1, -1):
        c = coeffs[k]
        if c:
            shift = k - n
            for j in range(n + 1):
                coeffs[shift + j] -= c * modulus[j]
    if len(coeffs) < n:
        coeffs = coeffs + [0] * (n - len(coeffs))
    return tuple(coeffs[:n])


def _cyclo_mul(x: IntVector, y: IntVector, modulus: IntVector) -> IntVector:
    n = len(x)
    if n == 1:
        return (x[0] * y[0],)
    prod = [0] * (2 * n - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    prod[i + j] += a * b
    return _reduce(prod, modulus)


def _add(x: IntVector, y: IntVector) -> IntVector:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: IntVector, y: IntVector) -> IntVector:
    return tuple(a - b for a, b in zip(x, y))


def _scale(x: IntVector, c: int) -> IntVector:
    return tuple(a * c for a in x)


class FieldTower:
    """Q(zeta_m) followed by square roots of the integral Scalars ``sqrts``.

    ``sqrts[i]`` lives in ``level(i)``. Radicands with denominators are
    scaled by the square of their denominator.
    """
    def __init__(
            self,
            conductor: int = 1,
            sqrts: Sequence['Scalar'] = ()
    ) -> None:
        if conductor < 1:
            raise ValueError(f'``conductor={conductor}`` is not supported')
        if len(sqrts) > TOWER_DEPTH_CAP:
            raise TowerDepthExceeded(f'tower depth {len(sqrts)} exceeds {TOWER_DEPTH_CAP}')

        self.conductor = conductor
        self.phi = int(totient(conductor))
        self.modulus = cyclotomic_coefficients(conductor)

        normalized = []
        for d in sqrts:
            d = FieldTower(conductor, normalized)(d)
            if d.is_zero():
                raise ValueError('cannot adjoin the square root of 0')
            normalized.append(Scalar(d.tower, _scale(d.num, d.den), 1))
        self.sqrts: Tuple['Scalar', ...] = tuple(normalized)
        self.depth = len(self.sqrts)
        self.degree = self.phi * 2 ** self.depth
        self._key = (conductor, tuple(d.num for d in self.sqrts))

    def __eq__(self, other: object) -> bool:
        return self is other or (isinstance(other, FieldTower) and self._key == other._key)

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        base = 'Q' if self.phi == 1 else f'Q(zeta{self.conductor})'
        if not self.sqrts:
            return base
        radicands = ', '.join(f'sqrt({d})' for d in self.sqrts)
        return f'{base}({radicands})'

    def level(self, i: int) -> 'FieldTower':
        assert 0 <= i <= self.depth
        if i == self.depth:
            return self
        return _tower_level(self, i)

    def __call__(self, value: Union[Rational, 'Scalar']) -> 'Scalar':
        if isinstance(value, Scalar):
            return self.coerce(value)
        value = Fraction(value)
        num = (value.numerator,) + (0,) * (self.degree - 1)
        return Scalar(self, num, value.denominator)

    def zero(self) -> 'Scalar':
        return Scalar(self, (0,) * self.degree, 1)

    def one(self) -> 'Scalar':
        return self(1)

    def zeta(self, k: int = 1) -> 'Scalar':
        """zeta_m ** k."""
        k %= self.conductor
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        base = _reduce(coeffs, self.modulus)
        return Scalar(self, tuple(base) + (0,) * (self.degree - self.phi), 1)

    def sqrt_generator(self, i: int) -> 'Scalar':
        """The basis element sqrt(sqrts[i]) (radicand as stored, i.e. integral)."""
        num = [0] * self.degree
        num[self.phi * (1 << i)] = 1
        return Scalar(self, tuple(num), 1)

    def from_coefficients(self, coeffs: Sequence[Rational]) -> 'Scalar':
        if len(coeffs) != self.degree:
            raise ValueError(f'expected {self.degree} coefficients, got {len(coeffs)}')
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        return Scalar(self, tuple(f.numerator * (den // f.denominator) for f in fracs), den)

    def embeds_into(self, other: 'FieldTower') -> bool:
        return _embedding(self, other) is not None

    def coerce(self, x: 'Scalar') -> 'Scalar':
        if x.tower == self:
            return x
        embed = _embedding(x.tower, self)
        if embed is None:
            raise TowerMismatch(f'{x.tower!r} does not embed into {self!r}')
        return Scalar(self, embed(x.num), x.den)

    def with_conductor(self, conductor: int) -> 'FieldTower':
        """The same tower over Q(zeta_conductor); ``conductor`` must be a multiple."""
        if conductor % self.conductor:
            raise TowerMismatch(f'{conductor} is not a multiple of {self.conductor}')
        if conductor == self.conductor:
            return self
        tower = FieldTower(conductor)
        for d in self.sqrts:
            tower = FieldTower(conductor, tower.sqrts + (tower.coerce(d),))
        return tower

    def collapse(self, level: int, root: 'Scalar') -> Tuple['FieldTower', Callable[['Scalar'], 'Scalar']]:
        """Drop sqrt level ``level`` (1-based) whose radicand has ``root`` as square root below it.

        Returns the smaller tower and the map sending Scalars of ``self`` into it.
        """
        assert 1 <= level <= self.depth
        below = self.level(level - 1)
        root = below.coerce(root)
        if root * root != self.sqrts[level - 1]:
            raise ValueError('``root`` is not a square root of the radicand')

        towers = {}

        def reduce(x: 'Scalar') -> 'Scalar':
            s = x.tower.depth
            if s < level:
                return x
            x0, x1 = x.halves()
            if s == level:
                return x0 + x1 * root
            target = new_level(s - 1)
            below_target = target.level(s - 2)
            # the new radicand is stored scaled by its squared denominator
            scale = reduce(self.sqrts[s - 1]).den
            r0, r1 = below_target.coerce(reduce(x0)), below_target.coerce(reduce(x1))
            return Scalar.from_halves(target, r0, r1 / scale)

        def new_level(i: int) -> 'FieldTower':
            # level i of the collapsed tower
            if i not in towers:
                if i < level:
                    towers[i] = self.level(i)
                else:
                    prev = new_level(i - 1)
                    towers[i] = FieldTower(self.conductor, prev.sqrts + (prev.coerce(reduce(self.sqrts[i])),))
            return towers[i]

        collapsed = new_level(self.depth - 1)
        return collapsed, lambda x: collapsed.coerce(reduce(self.coerce(x)))


@lru_cache(maxsize=None)
def _tower_level(tower: FieldTower, i: int) -> FieldTower:
    return FieldTower(tower.conductor, tower.sqrts[:i])


@lru_cache(maxsize=None)
def _embedding(src: FieldTower, dst: FieldTower) -> Optional[Callable[[IntVector], IntVector]]:
    if src == dst:
        return lambda num: num
    if dst.conductor % src.conductor or src.depth > dst.depth:
        return None
    step = dst.conductor // src.conductor
    zeta_images = [dst.zeta(a * step).num[:dst.phi] for a in range(src.phi)]

    def embed_base(num: IntVector) -> IntVector:
        out = [0] * dst.phi
        for a, c in enumerate(num):
            if c:
                for j, z in enumerate(zeta_images[a]):
                    out[j] += c * z
        return tuple(out)

    def embed_level(num: IntVector, s: int) -> IntVector:
        if s == 0:
            return embed_base(num)
        h = len(num) // 2
        return embed_level(num[:h], s - 1) + embed_level(num[h:], s - 1)

    for i, d in enumerate(src.sqrts):
        image = embed_level(d.num, i)
        if image != dst.sqrts[i].num:
            return None

    def embed(num: IntVector) -> IntVector:
        image = embed_level(num, src.depth)
        return image + (0,) * (dst.degree - len(image))

    return embed


def _common_tower(x: 'Scalar', y: 'Scalar') -> FieldTower:
    if x.tower == y.tower:
        return x.tower
    if x.tower.embeds_into(y.tower):
        return y.tower
    if y.tower.embeds_into(x.tower):
        return x.tower
    raise TowerMismatch(f'{x.tower!r} and {y.tower!r} are not compatible')


class Scalar:
    __slots__ = ('tower', 'num', 'den', '_hash')

    def __init__(self, tower: FieldTower, num: IntVector, den: int = 1) -> None:
        assert len(num) == tower.degree, (len(num), tower.degree)
        if den == 0:
            raise ZeroDivisionError('zero denominator')
        if den < 0:
            num, den = tuple(-c for c in num), -den
        g = math.gcd(den, *num)
        if g > 1:
            num, den = tuple(c // g for c in num), den // g
        self.tower = tower
        self.num = tuple(num)
        self.den = den
        self._hash = None

    # construction helpers

    @staticmethod
    def from_halves(tower: FieldTower, x0: 'Scalar', x1: 'Scalar') -> 'Scalar':
        """x0 + x1 * sqrt(top radicand), x0 and x1 from the level below."""
        below = tower.level(tower.depth - 1)
        x0, x1 = below.coerce(x0), below.coerce(x1)
        den = math.lcm(x0.den, x1.den)
        num = _scale(x0.num, den // x0.den) + _scale(x1.num, den // x1.den)
        return Scalar(tower, num, den)

    def halves(self) -> Tuple['Scalar', 'Scalar']:
        assert self.tower.depth > 0
        below = self.tower.level(self.tower.depth - 1)
        h = len(self.num) // 2
        return Scalar(below, self.num[:h], self.den), Scalar(below, self.num[h:], self.den)

    def coefficients(self) -> List[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    # predicates

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f'{self} is not rational')
        return Fraction(self.num[0], self.den)

    def minimal_level(self) -> int:
        """Smallest tower level containing this element."""
        s = self.tower.depth
        while s > 0 and not any(self.num[self.tower.phi * 2 ** (s - 1):]):
            s -= 1
        return s

    # arithmetic

    def _lift(self, other: Union['Scalar', Rational]) -> Tuple['Scalar', 'Scalar']:
        if not isinstance(other, Scalar):
            return self, self.tower(other)
        tower = _common_tower(self, other)
        return tower.coerce(self), tower.coerce(other)

    def __add__(self, other: Union['Scalar', Rational]) -> 'Scalar':
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        x, y = self._lift(other)
        if x.den == y.den:
            return Scalar(x.tower, _add(x.num, y.num), x.den)
        return Scalar(x.tower, _add(_scale(x.num, y.den), _scale(y.num, x.den)), x.den * y.den)

    __radd__ = __add__

    def __neg__(self) -> 'Scalar':
        return Scalar(self.tower, tuple(-c for c in self.num), self.den)

    def __sub__(self, other: Union['Scalar', Rational]) -> 'Scalar':
        x, y = self._lift(other)
        if x.den == y.den:
            return Scalar(x.tower, _sub(x.num, y.num), x.den)
        return Scalar(x.tower, _sub(_scale(x.num, y.den), _scale(y.num, x.den)), x.den * y.den)

    def __rsub__(self, other: Rational) -> 'Scalar':
        return (-self) + other

    def __mul__(self, other: Union['Scalar', Rational]) -> 'Scalar':
        if isinstance(other, int):
            return Scalar(self.tower, _scale(self.num, other), self.den)
        if isinstance(other, Fraction):
            return Scalar(self.tower, _scale(self.num, other.numerator), self.den * other.denominator)
        x, y = self._lift(other)
        return Scalar(x.tower, _level_mul(x.tower, x.tower.depth, x.num, y.num), x.den * y.den)

    __rmul__ = __mul__

    def inverse(self) -> 'Scalar':
        if self.is_zero():
            raise ZeroDivisionError('division by zero Scalar')
        tower = self.tower
        if tower.depth == 0:
            if tower.phi == 1:
                return tower(Fraction(self.den, self.num[0]))
            inv = _cyclo_inverse(self.num, tower.modulus)
            return tower.from_coefficients([c * self.den for c in inv])
        x0, x1 = self.halves()
        d = tower.sqrts[-1]
        norm = x0 * x0 - d * x1 * x1
        if norm.is_zero():
            raise ZeroDivisorDetected(tower, tower.depth, self)
        norm_inv = norm.inverse()
        return Scalar.from_halves(tower, x0 * norm_inv, -(x1 * norm_inv))

    def __truediv__(self, other: Union['Scalar', Rational]) -> 'Scalar':
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError('division by zero')
            other = Fraction(other)
            return Scalar(self.tower, _scale(self.num, other.denominator), self.den * other.numerator)
        x, y = self._lift(other)
        return x * y.inverse()

    def __rtruediv__(self, other: Rational) -> 'Scalar':
        return self.inverse() * other

    def __pow__(self, k: int) -> 'Scalar':
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.tower.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_top(self) -> 'Scalar':
        """x0 - x1 sqrt(d_s): the nontrivial automorphism of the top level."""
        x0, x1 = self.halves()
        return Scalar.from_halves(self.tower, x0, -x1)

    # comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.tower == other.tower:
            return self.den == other.den and self.num == other.num
        try:
            x, y = self._lift(other)
        except TowerMismatch:
            return False
        return x.den == y.den and x.num == y.num

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.tower, self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f'Scalar({self})'

    def __str__(self) -> str:
        terms = []
        phi = self.tower.phi
        for idx, c in enumerate(self.num):
            if not c:
                continue
            a, mask = idx % phi, idx // phi
            factors = []
            if a:
                factors.append(f'z{self.tower.conductor}^{a}' if a > 1 else f'z{self.tower.conductor}')
            factors.extend(f'r{i}' for i in range(self.tower.depth) if mask >> i & 1)
            coeff = Fraction(c, self.den)
            if not factors:
                terms.append(str(coeff))
            elif coeff == 1:
                terms.append('*'.join(factors))
            elif coeff == -1:
                terms.append('-' + '*'.join(factors))
            else:
                terms.append(f'{coeff}*' + '*'.join(factors))
        return ' + '.join(terms).replace('+ -', '- ') if terms else '0'


def _level_mul(tower: FieldTower, level: int, x: IntVector, y: IntVector) -> IntVector:
    if not any(x) or not any(y):
        return (0,) * len(x)
    if level == 0:
        return _cyclo_mul(x, y, tower.modulus)
    h = len(x) // 2
    x0, x1, y0, y1 = x[:h], x[h:], y[:h], y[h:]
    d = tower.sqrts[level - 1].num
    low = _level_mul(tower, level - 1, x0, y0)
    high = _level_mul(tower, level - 1, _level_mul(tower, level - 1, x1, y1), d)
    cross = _add(_level_mul(tower, level - 1, x0, y1), _level_mul(tower, level - 1, x1, y0))
    return _add(low, high) + cross


def _cyclo_inverse(num: IntVector, modulus: IntVector) -> List[Fraction]:
    f = [QQ(c) for c in reversed(num)]
    while f and not f[0]:
        f.pop(0)
    g = [QQ(c) for c in reversed(modulus)]
    inv = dup_invert(f, g, QQ)
    coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(inv)]
    return coeffs + [Fraction(0)] * (len(num) - len(coeffs))


def scalars(tower: FieldTower, values: Iterable[Union[Rational, Scalar]]) -> List[Scalar]:
    return [tower(v) for v in values]


def absolute_norm(x: Scalar) -> Fraction:
    """Norm of ``x`` from its tower down to Q."""
    while x.tower.depth > 0:
        x = (x * x.conjugate_top()).halves()[0]
    if x.tower.phi == 1:
        return Fraction(x.num[0], x.den)
    f = [ZZ(c) for c in reversed(x.num)]
    while f and not f[0]:
        f.pop(0)
    g = [ZZ(c) for c in reversed(x.tower.modulus)]
    return Fraction(int(dup_resultant(g, f, ZZ)), x.den ** x.tower.phi)
