import pytest

from g2lab.errors import NotAHomomorphism, OrderCapExceeded
from g2lab.groups import MatrixGroup
from g2lab.scalars import FieldTower, Matrix

from small_groups import permutation, quaternion8, symmetric3


Q = FieldTower(1)
Q4 = FieldTower(4)
I = Q4.zeta()


def test_cyclic_group_of_order_four():
    group = MatrixGroup([Matrix.diag(Q4, [I, I ** 3])])
    assert group.order == 4
    assert group.elements[0].is_identity()
    assert group.exponent() == 4
    assert group.is_abelian()
    assert group.order_profile() == {1: 1, 2: 1, 4: 2}


def test_symmetric_group_structure():
    group = symmetric3()
    assert len(group) == 6
    assert not group.is_abelian()
    assert group.exponent() == 6
    assert sorted(len(c) for c in group.conjugacy_classes()) == [1, 2, 3]
    inverses = group.inverses()
    assert all(group.product(i, inverses[i]) == 0 for i in range(6))


def test_quaternion_group():
    group = quaternion8()
    assert group.order == 8
    assert group.order_profile() == {1: 1, 2: 1, 4: 6}
    assert len(group.conjugacy_classes()) == 5


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        MatrixGroup([permutation(Q, [1, 0, 2]), permutation(Q, [0, 2, 1])], cap=3).enumerate()


def test_membership_and_index():
    group = symmetric3()
    assert permutation(Q, [2, 0, 1]) in group
    assert Matrix.diag(Q, [1, 1, -1]) not in group
    with pytest.raises(KeyError):
        group.index(Matrix.diag(Q, [2, 1, 1]))


def test_sign_representation():
    group = symmetric3()
    values = group.representation([Matrix(Q, [[-1]]), Matrix(Q, [[-1]])])
    assert [v[0, 0] for v in values] == [g.det() for g in group.elements]


def test_inconsistent_images_are_rejected():
    group = symmetric3()
    with pytest.raises(NotAHomomorphism):
        group.representation([Matrix(Q, [[-1]]), Matrix(Q, [[2]])])


def test_conjugate_group_has_the_same_order():
    group = symmetric3()
    t = Matrix(Q, [[1, 1, 0], [0, 1, 0], [0, 0, 2]])
    conjugate = group.conjugate(t)
    assert conjugate.order == 6
    assert t @ group.generators[0] @ t.inverse() in conjugate
