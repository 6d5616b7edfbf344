import pytest

from g2lab.errors import ExponentNotDividingConductor
from g2lab.groups import MatrixGroup, centralizer_dimension, isotypic_split
from g2lab.scalars import FieldTower, Matrix

from small_groups import doubled, quaternion8, symmetric3


Q = FieldTower(1)
Q3 = FieldTower(3)
Q4 = FieldTower(4)


def assert_decomposition(group, data):
    n = group.dim
    total = Matrix.zeros(group.tower, n, n)
    for datum in data:
        p = datum.projector
        total = total + p
        assert p @ p == p
        for g in group.generators:
            assert p @ g == g @ p
        for other in data:
            if other is not datum:
                assert (p @ other.projector).is_zero()
    assert total.is_identity()
    assert sum(d.component_dim for d in data) == n
    assert sum(d.multiplicity ** 2 for d in data) == centralizer_dimension(group)


def test_trivial_group():
    group = MatrixGroup([Matrix.identity(Q, 7)])
    (datum,) = isotypic_split(group)
    assert (datum.dim, datum.multiplicity, datum.selfdual) == (1, 7, True)
    assert_decomposition(group, isotypic_split(group))


def test_permutation_module_of_s3():
    group = symmetric3(Q3)
    data = isotypic_split(group)
    assert sorted((d.dim, d.multiplicity) for d in data) == [(1, 1), (2, 1)]
    assert all(d.selfdual for d in data)
    assert_decomposition(group, data)


def test_conductor_must_contain_the_exponent():
    with pytest.raises(ExponentNotDividingConductor):
        isotypic_split(symmetric3(Q))


def test_cyclic_group_with_dual_pair():
    i = Q4.zeta()
    group = MatrixGroup([Matrix.diag(Q4, [i, -i, 1])])
    data = isotypic_split(group)
    assert len(data) == 3
    assert sorted(d.selfdual for d in data) == [False, False, True]
    assert_decomposition(group, data)


def test_two_copies_of_the_quaternion_module():
    group = doubled(quaternion8())
    (datum,) = isotypic_split(group)
    assert (datum.dim, datum.multiplicity, datum.selfdual) == (2, 2, True)
    assert_decomposition(group, [datum])
    assert centralizer_dimension(group) == 4
