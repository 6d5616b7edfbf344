"""Roots of polynomials inside a FieldTower.

A rational prime p = 1 (mod m) at which every radicand is a square gives
degree(T) ring maps T -> Z/p^k. Roots of each image are found with
sympy's finite-field factorisation, Hensel lifted, and matched across the
maps by a meet-in-the-middle search on one linear functional of the
coordinates. Every candidate is verified exactly.
"""
import itertools
import logging
import math
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import nextprime, primitive_root
from sympy.ntheory.residue_ntheory import sqrt_mod
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor_sqf, gf_sqf_p, gf_strip

from g2lab.config import (
    HENSEL_MAX_BITS, HENSEL_START_BITS, MATCH_TABLE_CAP, ROOT_PRIME_START, ROOT_RETRY_BUDGET,
    SPLIT_PRIME_ATTEMPTS
)
from g2lab.errors import IncompleteSplit
from g2lab.scalars.field import FieldTower, Scalar, absolute_norm
from g2lab.scalars.poly import Poly, root_multiplicity


logger = logging.getLogger(__name__)

Embeddings = List[List[int]]


def roots_in_tower(
        p: Poly,
        require_complete: bool = False,
        seed: int = 0
) -> List[Tuple[Scalar, int]]:
    """All roots of ``p`` lying in its tower, with multiplicities.

    The list is complete: the number of distinct roots found matches the
    fewest roots of any modular image at one prime. If that bound is not met
    within the retry budget, or if ``require_complete`` is set and ``p``
    does not split into linear factors, IncompleteSplit is raised.
    """
    if p.is_zero():
        raise ValueError('``p`` must be nonzero')
    if p.degree < 1:
        return []

    f = p.squarefree_part()
    try:
        roots = _squarefree_roots(f, seed)
    except IncompleteSplit as e:
        partial = [(r, root_multiplicity(p, r)) for r in e.roots]
        raise IncompleteSplit(partial, _cofactor(p, partial), str(e)) from None

    found = [(r, root_multiplicity(p, r)) for r in roots]
    if require_complete and sum(k for _, k in found) < p.degree:
        raise IncompleteSplit(found, _cofactor(p, found))
    return found


def _cofactor(p: Poly, roots: Sequence[Tuple[Scalar, int]]) -> Poly:
    for r, k in roots:
        p = p // (Poly(p.tower, [-r, 1]) ** k)
    return p


def _squarefree_roots(f: Poly, seed: int) -> List[Scalar]:
    tower = f.tower
    f = f.monic()
    n = f.degree
    if n == 1:
        return [-f.coeff(0)]

    # f(t) = scale^-n g(scale t) with g monic and integral
    scale = math.lcm(*(c.den for c in f.coeffs))
    g = [(c * scale ** (n - j)).num for j, c in enumerate(f.coeffs)]
    index_scale = _index_scale(tower)

    candidates = []
    for prime in itertools.islice(_split_primes(tower, index_scale, seed), SPLIT_PRIME_ATTEMPTS):
        images = _embedding_images(tower, prime, 1)
        if images is None:
            continue
        counts = []
        for row in images:
            roots = _roots_mod_p(_image_poly(g, row, prime), prime)
            if roots is None:
                break
            counts.append(len(roots))
        else:
            bound = min(counts)
            if bound == 0:
                logger.debug('no roots of degree %d polynomial over %r (prime %d)', n, tower, prime)
                return []
            candidates.append((bound, prime))
            if len(candidates) >= 4 * ROOT_RETRY_BUDGET:
                break
    candidates.sort(key=lambda c: c[0])

    best: List[Scalar] = []
    for bound, prime in candidates[:ROOT_RETRY_BUDGET]:
        bits = HENSEL_START_BITS
        while bits <= HENSEL_MAX_BITS:
            k = bits // prime.bit_length() + 1
            found = _lift_and_match(f, g, scale, index_scale, prime, k)
            if found is None:
                break
            if len(found) > len(best):
                best = found
            if len(found) == bound:
                return found
            logger.debug('found %d of at most %d roots at %d bits, prime %d', len(found), bound, bits, prime)
            bits *= 2
    raise IncompleteSplit(best, None, f'root bound not met within the retry budget over {tower!r}')


def _index_scale(tower: FieldTower) -> int:
    """An integer D such that D times the coordinates of any algebraic integer of the tower are integers."""
    d = 1
    for radicand in tower.sqrts:
        d *= 2 * abs(absolute_norm(radicand).numerator)
    return d


def _split_primes(tower: FieldTower, index_scale: int, seed: int) -> Iterator[int]:
    m = tower.conductor
    prime = nextprime(ROOT_PRIME_START + 1000 * seed)
    while True:
        if (prime - 1) % m == 0 and index_scale % prime and m % prime:
            yield prime
        prime = nextprime(prime)


def _hensel_sqrt(a: int, r: int, p: int, modulus: int) -> int:
    precision = p
    while precision < modulus:
        precision = min(precision * precision, modulus)
        r = (r - (r * r - a) * pow(2 * r, -1, precision)) % precision
    return r


def _embedding_images(tower: FieldTower, p: int, k: int) -> Optional[Embeddings]:
    """Images mod p^k of the basis under every ring map T -> Z/p^k, or None if p is unsuitable."""
    modulus = p ** k
    m = tower.conductor
    omega = pow(primitive_root(p), (p - 1) // m, p)
    omega = pow(omega, p ** (k - 1), modulus)
    units = [u for u in range(1, m + 1) if math.gcd(u, m) == 1]
    rows = [[pow(omega, u * a, modulus) for a in range(tower.phi)] for u in units]

    for radicand in tower.sqrts:
        extended = []
        for row in rows:
            value = sum(c * b for c, b in zip(radicand.num, row)) % modulus
            if value % p == 0:
                return None
            s = sqrt_mod(value % p, p)
            if s is None:
                return None
            s = _hensel_sqrt(value, s, p, modulus)
            for sign in (s, modulus - s):
                extended.append(row + [b * sign % modulus for b in row])
        rows = extended
    return rows


def _image_poly(g: Sequence[Sequence[int]], row: Sequence[int], modulus: int) -> List[int]:
    return [sum(c * b for c, b in zip(coeff, row)) % modulus for coeff in g]


def _roots_mod_p(h: Sequence[int], p: int) -> Optional[List[int]]:
    """Roots of ``h`` (lowest degree first) mod p, or None if h is not squarefree mod p."""
    f = gf_strip([ZZ(c % p) for c in reversed(h)])
    if not gf_sqf_p(f, p, ZZ):
        return None
    _, factors = gf_factor_sqf(f, p, ZZ)
    return sorted((-int(fac[1])) % p for fac in factors if len(fac) == 2)


def _evaluate_mod(h: Sequence[int], x: int, modulus: int) -> int:
    acc = 0
    for c in reversed(h):
        acc = (acc * x + c) % modulus
    return acc


def _hensel_root(h: Sequence[int], r: int, p: int, modulus: int) -> int:
    dh = [i * c for i, c in enumerate(h)][1:]
    precision = p
    while precision < modulus:
        precision = min(precision * precision, modulus)
        r = (r - _evaluate_mod(h, r, precision) * pow(_evaluate_mod(dh, r, precision), -1, precision)) % precision
    return r


def _inverse_mod(rows: Embeddings, p: int, modulus: int) -> Optional[Embeddings]:
    n = len(rows)
    work = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(rows)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c] % p), None)
        if pivot is None:
            return None
        work[c], work[pivot] = work[pivot], work[c]
        inv = pow(work[c][c], -1, modulus)
        work[c] = [x * inv % modulus for x in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % modulus for x, y in zip(work[i], work[c])]
    return [row[n:] for row in work]


def _symmetric(x: int, modulus: int) -> int:
    x %= modulus
    return x - modulus if x > modulus // 2 else x


def _windows(target: int, width: int, modulus: int) -> List[Tuple[int, int]]:
    lo, hi = target - width, target + width
    if hi - lo + 1 >= modulus:
        return [(0, modulus - 1)]
    if lo < 0:
        return [(0, hi), (lo + modulus, modulus - 1)]
    if hi >= modulus:
        return [(lo, modulus - 1), (0, hi - modulus)]
    return [(lo, hi)]


def _lift_and_match(
        f: Poly,
        g: Sequence[Sequence[int]],
        scale: int,
        index_scale: int,
        p: int,
        k: int
) -> Optional[List[Scalar]]:
    tower = f.tower
    modulus = p ** k
    images = _embedding_images(tower, p, k)
    if images is None:
        return None
    inverse = _inverse_mod(images, p, modulus)
    if inverse is None:
        return None
    weights = [[index_scale * x % modulus for x in row] for row in inverse]
    n = len(images)

    root_lists = []
    for row in images:
        h = _image_poly(g, row, modulus)
        roots = _roots_mod_p(h, p)
        if roots is None:
            return None
        root_lists.append([_hensel_root(h, r, p, modulus) for r in roots])

    bound = math.isqrt(modulus) // 2
    key_weights = [sum((i + 1) * weights[i][j] for i in range(n)) % modulus for j in range(n)]
    key_width = bound * n * (n + 1) // 2

    half = n // 2
    left, right = list(range(half)), list(range(half, n))
    if max(math.prod(len(root_lists[j]) for j in side) for side in (left, right)) > MATCH_TABLE_CAP:
        logger.debug('match table over cap for prime %d', p)
        return None

    def partial_sums(indices: List[int]) -> List[Tuple[int, Tuple[int, ...]]]:
        return [
            (sum(key_weights[j] * x for j, x in zip(indices, choice)) % modulus, choice)
            for choice in itertools.product(*(root_lists[j] for j in indices))
        ]

    table = sorted(partial_sums(right))
    keys = [s for s, _ in table]

    found: List[Scalar] = []
    for s, choice in partial_sums(left):
        for lo, hi in _windows(-s % modulus, key_width, modulus):
            for idx in range(bisect_left(keys, lo), bisect_right(keys, hi)):
                values = choice + table[idx][1]
                coords = [_symmetric(sum(w * x for w, x in zip(row, values)), modulus) for row in weights]
                if any(abs(c) > bound for c in coords):
                    continue
                root = tower.from_coefficients([Fraction(c, index_scale * scale) for c in coords])
                if f(root).is_zero() and root not in found:
                    found.append(root)
    return found
