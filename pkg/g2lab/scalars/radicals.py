import logging
import math
from typing import Optional, Tuple

from g2lab.errors import IncompleteSplit
from g2lab.scalars.field import FieldTower, Rational, Scalar
from g2lab.scalars.poly import Poly
from g2lab.scalars.roots import roots_in_tower


logger = logging.getLogger(__name__)


def canonical_sign(x: Scalar) -> Scalar:
    """The one of +-x whose first nonzero coordinate is positive."""
    for c in x.num:
        if c:
            return x if c > 0 else -x
    return x


def _rational_sqrt(x: Scalar) -> Optional[Scalar]:
    q = x.to_fraction()
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return x.tower(a) / b
    return None


def try_sqrt(x: Scalar) -> Optional[Scalar]:
    """A square root of ``x`` in its own tower, or None.

    None is advisory: a square root may exist that the search did not certify.
    """
    if x.is_zero():
        return x
    if x.is_rational():
        root = _rational_sqrt(x)
        if root is not None:
            return root
    root = _try_sqrt(x)
    if root is None:
        return None
    assert root * root == x
    return canonical_sign(root)


def _try_sqrt(x: Scalar) -> Optional[Scalar]:
    tower = x.tower
    if tower.depth == 0:
        if tower.degree == 1:
            return None
        try:
            roots = roots_in_tower(Poly(tower, [-x, 0, 1]))
        except IncompleteSplit:
            logger.debug('square root search of %s inconclusive', x)
            return None
        return roots[0][0] if roots else None

    # x = x0 + x1 sqrt(d); a root u + v sqrt(d) has u^2 = (x0 +- n)/2 with n^2 = x0^2 - d x1^2
    x0, x1 = x.halves()
    d = tower.sqrts[-1]
    generator = tower.sqrt_generator(tower.depth - 1)
    if x1.is_zero():
        u = try_sqrt(x0)
        if u is not None:
            return tower.coerce(u)
        v = try_sqrt(x0 / d)
        return None if v is None else tower.coerce(v) * generator

    n = try_sqrt(x0 * x0 - d * x1 * x1)
    if n is None:
        return None
    for sign in (n, -n):
        u = try_sqrt((x0 + sign) / 2)
        if u is None or u.is_zero():
            continue
        candidate = Scalar.from_halves(tower, u, x1 / (u * 2))
        if candidate * candidate == x:
            return candidate
    return None


def adjoin_sqrt(tower: FieldTower, d: Scalar) -> FieldTower:
    """A tower containing a square root of ``d``: ``tower`` itself when one is found there."""
    d = tower(d)
    if d.is_zero():
        raise ValueError('cannot adjoin the square root of 0')
    if try_sqrt(d) is not None:
        return tower
    extended = FieldTower(tower.conductor, tower.sqrts + (d,))
    logger.debug('adjoined sqrt(%s) to %r', d, tower)
    return extended


def sqrt_of(d: Scalar) -> Tuple[FieldTower, Scalar]:
    """(tower, root) with root^2 == d, extending d's tower only when needed."""
    root = try_sqrt(d)
    if root is not None:
        return d.tower, root
    tower = adjoin_sqrt(d.tower, d)
    # the stored radicand is d * den^2
    root = tower.sqrt_generator(tower.depth - 1) / d.den
    assert root * root == tower.coerce(d)
    return tower, root


def sqrt_rational(tower: FieldTower, q: Rational) -> Tuple[FieldTower, Scalar]:
    return sqrt_of(tower(q))
