import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from g2lab.errors import IncompleteSplit, WitnessUnavailable
from g2lab.geometry import QuadSpace, SubspaceFlag, congruence_diagonalize
from g2lab.groups.characters import dual
from g2lab.groups.isotypic import (
    IsotypicDatum, element_images, component_basis, eigenspace_in_component, generator_images, isotypic_split
)
from g2lab.groups.matrix_group import MatrixGroup
from g2lab.scalars import (
    FieldTower, Matrix, Scalar, Vector, charpoly, roots_in_tower, span_basis, sqrt_of, try_sqrt
)


logger = logging.getLogger(__name__)


def witt_index(
        group: MatrixGroup,
        rep: Optional[Sequence[Matrix]] = None,
        data: Optional[List[IsotypicDatum]] = None
) -> int:
    """Dimension of a maximal totally isotropic stable subspace of a nondegenerate invariant form.

    The anisotropic core is carried by the selfdual constituents of odd multiplicity.
    """
    if data is None:
        data = isotypic_split(group, rep)
    dim = sum(d.component_dim for d in data)
    core = sum(d.dim for d in data if d.selfdual and d.multiplicity % 2)
    assert (dim - core) % 2 == 0
    return (dim - core) // 2


@dataclass(frozen=True)
class WittWitness:
    index: int
    basis: Tuple[Vector, ...]
    tower_extensions: Tuple[Scalar, ...] = field(default=())
    # indices (into the isotypic data) of the non-selfdual components taken whole
    chosen_components: Tuple[int, ...] = field(default=())


def _spin(rep: Sequence[Matrix], v: Sequence[Scalar]) -> List[Vector]:
    return span_basis(v[0].tower, [m.apply(v) for m in rep])


def _constituent_lines(group: MatrixGroup, rep: Sequence[Matrix], datum: IsotypicDatum) -> List[Vector]:
    """One vector in each of ``multiplicity`` independent copies of the constituent."""
    if datum.dim == 1:
        return component_basis(datum)
    for m in rep:
        try:
            eigenvalues = roots_in_tower(charpoly(m))
        except IncompleteSplit:
            continue
        for value, _ in eigenvalues:
            vectors = eigenspace_in_component(datum, m, value)
            if len(vectors) == datum.multiplicity:
                return vectors
    raise WitnessUnavailable('no group element has a simple eigenvalue on the constituent')


def _multiplicity_form(space: QuadSpace, rep: Sequence[Matrix], lines: Sequence[Vector]) -> Matrix:
    for m in rep:
        moved = [m.apply(v) for v in lines]
        form = Matrix(space.tower, [[space.beta(v, w) for w in moved] for v in lines])
        if not form.is_zero():
            return form
    raise AssertionError('invariant form vanishes on a selfdual component')


def _pair_symmetric(form: Matrix, tower: FieldTower) -> Tuple[FieldTower, List[Vector], List[Scalar]]:
    """Coefficient vectors spanning a maximal isotropic subspace of a symmetric form.

    ``tower`` contains the tower of ``form`` and is extended by square roots as needed.
    """
    basis, values = congruence_diagonalize(QuadSpace(form, check=False))
    extensions = []
    unused = list(range(len(values)))
    pairs = []
    while len(unused) >= 2:
        i = unused.pop(0)
        j = next((j for j in unused if try_sqrt(-values[i] / values[j]) is not None), unused[0])
        unused.remove(j)
        pairs.append((i, j))

    coefficients = []
    for i, j in pairs:
        ratio = tower.coerce(-values[i] / values[j])
        mu = try_sqrt(ratio)
        if mu is None:
            tower, mu = sqrt_of(ratio)
            extensions.append(ratio)
            logger.debug('witness construction adjoined sqrt(%s)', ratio)
        coefficients.append((i, j, mu))
    vectors = [
        tuple(tower(a) + tower(b) * mu for a, b in zip(basis[i], basis[j])) for i, j, mu in coefficients
    ]
    return tower, vectors, extensions


def _pair_alternating(form: Matrix) -> List[Vector]:
    tower = form.tower
    n = form.rows

    def b(x, y):
        return sum((x[i] * form[i, j] * y[j] for i in range(n) for j in range(n)), tower.zero())

    remaining = [tuple(tower(int(i == j)) for j in range(n)) for i in range(n)]
    lagrangian = []
    while remaining:
        x = remaining.pop(0)
        k = next((k for k, y in enumerate(remaining) if not b(x, y).is_zero()), None)
        assert k is not None, 'alternating multiplicity form is degenerate'
        y = remaining.pop(k)
        c = b(x, y)
        lagrangian.append(x)
        projected = []
        for z in remaining:
            s, t = b(z, y) / c, b(z, x) / c
            projected.append(tuple(zi - s * xi + t * yi for zi, xi, yi in zip(z, x, y)))
        remaining = projected
    return lagrangian


def witt_witness(
        group: MatrixGroup,
        space: QuadSpace,
        rep: Optional[Sequence[Matrix]] = None,
        data: Optional[List[IsotypicDatum]] = None
) -> WittWitness:
    """An explicit stable totally isotropic subspace of dimension ``witt_index``.

    The representative of each dual pair of non-selfdual components is the
    first one in isotypic order; this choice is not canonical.
    """
    rep = element_images(group, rep)
    if data is None:
        data = isotypic_split(group, rep)
    index = witt_index(group, rep, data)
    tower = rep[0].tower

    basis: List[Vector] = []
    chosen = []
    taken = set()
    for k, datum in enumerate(data):
        if datum.selfdual or k in taken:
            continue
        partner = dual(group, datum.character)
        other = next(j for j, d in enumerate(data) if d.character == partner)
        taken.update({k, other})
        chosen.append(k)
        basis.extend(component_basis(datum))

    extensions: List[Scalar] = []
    pieces = []
    for datum in data:
        if not datum.selfdual or datum.multiplicity < 2:
            continue
        lines = _constituent_lines(group, rep, datum)
        form = _multiplicity_form(space.coerce(rep[0].tower), rep, lines)
        if form == form.transpose():
            tower, coefficients, added = _pair_symmetric(form, tower)
            extensions.extend(added)
        else:
            assert form == -form.transpose()
            coefficients = _pair_alternating(form)
        pieces.append((lines, coefficients))

    rep_t = [m.coerce(tower) for m in rep]
    basis = [tuple(tower.coerce(x) for x in v) for v in basis]
    for lines, coefficients in pieces:
        for a in coefficients:
            v = [tower.zero()] * len(lines[0])
            for c, line_ in zip(a, lines):
                v = [x + tower.coerce(c) * tower.coerce(y) for x, y in zip(v, line_)]
            basis.extend(_spin(rep_t, v))

    basis = span_basis(tower, basis)
    space_t = space.coerce(tower)
    flag = SubspaceFlag.of(space_t, basis)
    if not flag.totally_isotropic or len(basis) != index:
        raise AssertionError(f'witness of dimension {len(basis)} is not a totally isotropic subspace of dim {index}')
    for m in generator_images(group, rep_t) if basis else []:
        if Matrix(tower, basis + [m.apply(v) for v in basis]).rank() != len(basis):
            raise AssertionError('witness is not stable')
    logger.debug('Witt witness of %s: dimension %d, extensions %s', group.name, index, extensions)
    return WittWitness(
        index=index, basis=tuple(basis), tower_extensions=tuple(extensions), chosen_components=tuple(chosen)
    )
