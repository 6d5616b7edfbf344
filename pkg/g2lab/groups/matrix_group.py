import logging
from collections import Counter, deque
from functools import reduce
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence

from g2lab.config import ORDER_CAP
from g2lab.errors import NotAHomomorphism, OrderCapExceeded
from g2lab.scalars import FieldTower, Matrix


logger = logging.getLogger(__name__)


def common_tower(matrices: Sequence[Matrix]) -> FieldTower:
    tower = matrices[0].tower
    for m in matrices[1:]:
        if not m.tower.embeds_into(tower):
            tower = m.tower
    return tower


class MatrixGroup:
    """Finite group generated by invertible matrices, enumerated lazily by breadth-first closure.

    Element 0 is the identity; element i > 0 is ``elements[parent[i]] @ generators[via[i]]``.
    """
    def __init__(self, generators: Sequence[Matrix], name: str = 'group', cap: int = ORDER_CAP) -> None:
        if not generators:
            raise ValueError('at least one generator is required')
        tower = common_tower(generators)
        self.generators = [g.coerce(tower) for g in generators]
        if any(not g.is_square or g.rows != self.generators[0].rows for g in self.generators):
            raise ValueError('generators must be square matrices of one size')
        self.tower = tower
        self.dim = self.generators[0].rows
        self.name = name
        self.cap = cap
        self._elements: Optional[List[Matrix]] = None
        self._index: Dict[tuple, int] = {}
        self.parent: List[int] = []
        self.via: List[int] = []
        # _right[i][k] is the index of elements[i] @ generators[k]
        self._right: List[List[int]] = []
        self._inverses: Optional[List[int]] = None
        self._orders: Optional[List[int]] = None

    def __repr__(self) -> str:
        size = len(self._elements) if self._elements is not None else '?'
        return f'MatrixGroup({self.name!r}, dim={self.dim}, order={size})'

    def enumerate(self, cap: Optional[int] = None) -> List[Matrix]:
        if self._elements is not None:
            return self._elements
        cap = self.cap if cap is None else cap
        if cap < 1:
            raise ValueError(f'``cap={cap}`` is not supported')
        identity = Matrix.identity(self.tower, self.dim)
        elements = [identity]
        index = {identity.key(): 0}
        parent, via = [-1], [-1]
        right: List[List[int]] = []
        queue = deque([0])
        while queue:
            i = queue.popleft()
            row = []
            for k, g in enumerate(self.generators):
                x = elements[i] @ g
                key = x.key()
                if key in index:
                    row.append(index[key])
                    continue
                if len(elements) >= cap:
                    raise OrderCapExceeded(f'{self.name} has more than {cap} elements')
                index[key] = len(elements)
                elements.append(x)
                parent.append(i)
                via.append(k)
                row.append(index[key])
                queue.append(index[key])
            right.append(row)
        logger.debug('enumerated %s: %d elements', self.name, len(elements))
        self._elements, self._index, self.parent, self.via = elements, index, parent, via
        self._right = right
        return elements

    @property
    def elements(self) -> List[Matrix]:
        return self.enumerate()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[Matrix]:
        return iter(self.elements)

    def index(self, m: Matrix) -> int:
        self.enumerate()
        i = self._index.get(m.coerce(self.tower).key())
        if i is None:
            raise KeyError('matrix is not an element of the group')
        return i

    def __contains__(self, m: Matrix) -> bool:
        self.enumerate()
        return m.coerce(self.tower).key() in self._index

    def word(self, i: int) -> List[int]:
        """Generator indices k_1..k_r with elements[i] = generators[k_1] @ ... @ generators[k_r]."""
        self.enumerate()
        word = []
        while i:
            word.append(self.via[i])
            i = self.parent[i]
        return word[::-1]

    def product(self, i: int, j: int) -> int:
        """Index of elements[i] @ elements[j], read off the multiplication table."""
        self.enumerate()
        for k in self.word(j):
            i = self._right[i][k]
        return i

    def inverses(self) -> List[int]:
        if self._inverses is None:
            self._inverses = [self.index(g.inverse()) for g in self.elements]
        return self._inverses

    def element_orders(self) -> List[int]:
        if self._orders is None:
            orders = []
            for g in self.elements:
                k, x = 1, g
                while not x.is_identity():
                    x = x @ g
                    k += 1
                orders.append(k)
            self._orders = orders
        return self._orders

    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), self.element_orders(), 1)

    def order_profile(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.element_orders()).items()))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a @ b == b @ a for i, a in enumerate(gens) for b in gens[i + 1:])

    def representation(self, images: Sequence[Matrix]) -> List[Matrix]:
        """Evaluate the homomorphism with the given generator images on every element."""
        if len(images) != len(self.generators):
            raise ValueError('one image per generator is required')
        elements = self.elements
        tower = common_tower(images)
        images = [m.coerce(tower) for m in images]
        values = [Matrix.identity(tower, images[0].rows)]
        for i in range(1, len(elements)):
            values.append(values[self.parent[i]] @ images[self.via[i]])
        for i, g in enumerate(elements):
            for k, gen in enumerate(self.generators):
                j = self.index(g @ gen)
                if values[j] != values[i] @ images[k]:
                    raise NotAHomomorphism(f'relation fails at element {i} times generator {k}')
        return values

    def subgroup(self, generators: Sequence[Matrix], name: Optional[str] = None) -> 'MatrixGroup':
        return MatrixGroup(generators, name=name or f'subgroup of {self.name}', cap=self.cap)

    def conjugate(self, t: Matrix, name: Optional[str] = None) -> 'MatrixGroup':
        """The group t G t^-1."""
        t_inv = t.inverse()
        return MatrixGroup([t @ g @ t_inv for g in self.generators], name=name or self.name, cap=self.cap)

    def conjugacy_classes(self) -> List[List[int]]:
        self.enumerate()
        gen_inverses = [g.inverse() for g in self.generators]
        seen = set()
        classes = []
        for i in range(self.order):
            if i in seen:
                continue
            orbit, queue = [i], [i]
            seen.add(i)
            while queue:
                j = queue.pop()
                for g, g_inv in zip(self.generators, gen_inverses):
                    k = self.index(g_inv @ self.elements[j] @ g)
                    if k not in seen:
                        seen.add(k)
                        orbit.append(k)
                        queue.append(k)
            classes.append(sorted(orbit))
        return classes
