"""Polynomials of type G2.

A monic degree 7 polynomial is of type G2 when its roots are
1, x, y, xy, 1/x, 1/y, 1/xy for some x, y. Writing the roots other than 1
as pairs {z, 1/z} and s = t + 1/t, such a polynomial equals
(t - 1) t^3 Q(s) with Q(s) = s^3 - a s^2 + b s - c, and the condition is
a^2 = 2b + c + 4.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Literal, Optional, Sequence, Tuple

import sympy

from g2lab.errors import NotMonicDegree7
from g2lab.groups import MatrixGroup
from g2lab.scalars import Poly, Scalar, charpoly


logger = logging.getLogger(__name__)

Reason = Literal['not antipalindromic', 'relation fails']


@dataclass(frozen=True)
class TypeG2Verdict:
    type_g2: bool
    abc: Optional[Tuple[Scalar, Scalar, Scalar]] = None
    reason: Optional[Reason] = None

    def __bool__(self) -> bool:
        return self.type_g2


def _cubic(coeffs: Sequence) -> tuple:
    """(a, b, c) from the coefficients of an antipalindromic degree 7 polynomial, lowest first.

    Works over any commutative ring: P = (t - 1) R is solved top down for R,
    and R = t^3 Q(t + 1/t) is triangular in the coefficients of Q.
    """
    r6 = coeffs[7]
    r5 = coeffs[6] + r6
    r4 = coeffs[5] + r5
    r3 = coeffs[4] + r4
    return -r5, r4 - 3, r5 * 2 - r3


def type_g2_verdict(p: Poly) -> TypeG2Verdict:
    if p.degree != 7 or not p.is_monic():
        raise NotMonicDegree7(f'expected a monic polynomial of degree 7, got {p!r}')
    coeffs = [p.coeff(i) for i in range(8)]
    if any(coeffs[7 - i] != -coeffs[i] for i in range(4)):
        return TypeG2Verdict(False, reason='not antipalindromic')
    a, b, c = _cubic(coeffs)
    if a * a != b * 2 + c + 4:
        return TypeG2Verdict(False, abc=(a, b, c), reason='relation fails')
    return TypeG2Verdict(True, abc=(a, b, c))


def poly_is_type_g2(p: Poly) -> bool:
    return type_g2_verdict(p).type_g2


def roots_are_type_g2(roots: Sequence[Scalar]) -> bool:
    """Brute force over all choices of x and y among the roots; no relation is used."""
    if len(roots) != 7 or any(r.is_zero() for r in roots):
        return False
    target = Counter(roots)
    for x in target:
        for y in target:
            xy = x * y
            candidate = Counter([x.tower.one(), x, y, xy, x.inverse(), y.inverse(), xy.inverse()])
            if candidate == target:
                return True
    return False


def type_g2_symbolic_equivalence_check() -> bool:
    """The relation a^2 = 2b + c + 4 for generic x, y, as an identity of Laurent polynomials."""
    t, x, y = sympy.symbols('t x y')
    roots = [1, x, y, x * y, 1 / x, 1 / y, 1 / (x * y)]
    p = sympy.Poly(sympy.expand(sympy.prod([t - r for r in roots])), t)
    coeffs = [sympy.cancel(c) for c in reversed(p.all_coeffs())]
    if any(sympy.cancel(coeffs[7 - i] + coeffs[i]) != 0 for i in range(4)):
        return False
    a, b, c = (sympy.cancel(v) for v in _cubic(coeffs))
    residual = sympy.cancel(a ** 2 - 2 * b - c - 4)
    logger.debug('symbolic residual: %s', residual)
    return residual == 0


def elementwise_type_g2(group: MatrixGroup) -> Tuple[bool, Optional[int]]:
    """Whether every element has a characteristic polynomial of type G2; the first failing index otherwise.

    The test is a class function, so one representative per conjugacy class is checked.
    """
    for cls in group.conjugacy_classes():
        if not poly_is_type_g2(charpoly(group.elements[cls[0]])):
            logger.debug('%s: element %d is not of type G2', group.name, cls[0])
            return False, cls[0]
    return True, None
