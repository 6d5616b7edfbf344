import pytest

from g2lab.errors import NonIntegerMultiplicity
from g2lab.groups import (
    MatrixGroup, character, dual, inner_product, is_selfdual, multiplicity, multiplicity_vector,
    order2_linear_characters, power_characters, repring_identity_check, trivial_character
)
from g2lab.scalars import FieldTower, Matrix

from small_groups import permutation, quaternion8, symmetric3


Q = FieldTower(1)
Q4 = FieldTower(4)


def test_power_characters_at_identity():
    group = MatrixGroup([Matrix.identity(Q, 7)])
    powers = power_characters(group)
    assert powers.exterior_cube() == (35,)
    assert powers.symmetric_square() == (28,)
    assert powers.exterior_square() == (21,)


def test_exterior_and_symmetric_squares_add_up():
    group = symmetric3()
    powers = power_characters(group)
    for chi, l2, s2 in zip(powers.first, powers.exterior_square(), powers.symmetric_square()):
        assert l2 + s2 == chi * chi


def test_permutation_character_of_s3():
    group = symmetric3()
    chi = character(group.elements)
    sign = tuple(g.det() for g in group.elements)
    assert multiplicity(trivial_character(group), group, chi) == 1
    assert multiplicity(sign, group, chi) == 0
    assert inner_product(group, chi, chi) == 2
    assert is_selfdual(group, chi)


def test_non_integer_multiplicity_is_reported():
    group = symmetric3()
    spike = tuple(Q(int(i == 0)) for i in range(group.order))
    with pytest.raises(NonIntegerMultiplicity):
        multiplicity(trivial_character(group), group, spike)


def test_dual_of_a_faithful_cyclic_character():
    i = Q4.zeta()
    group = MatrixGroup([Matrix.diag(Q4, [i])])
    chi = character(group.elements)
    assert not is_selfdual(group, chi)
    assert dual(group, chi)[1] == -chi[1]
    assert multiplicity_vector(group, chi, [chi, dual(group, chi)]) == [1, 0]


@pytest.mark.parametrize('group, expected', [
    (symmetric3(), 2),
    (quaternion8(), 4),
    (MatrixGroup([Matrix.diag(Q4, [Q4.zeta(), 1]), Matrix.diag(Q4, [1, -1])]), 4),
    (MatrixGroup([permutation(Q, [1, 2, 0])]), 1),
])
def test_order2_linear_characters(group, expected):
    characters = order2_linear_characters(group)
    assert len(characters) == expected
    assert all(x == 1 for x in characters[0])
    for beta in characters:
        for i in range(group.order):
            for j in range(group.order):
                assert beta[group.product(i, j)] == beta[i] * beta[j]


def test_repring_identity_holds_for_trivial_group():
    assert repring_identity_check(MatrixGroup([Matrix.identity(Q, 7)])) == (True, None)


def test_repring_identity_fails_for_a_two_dimensional_minus_one_eigenspace():
    group = MatrixGroup([Matrix.diag(Q, [-1, -1, 1, 1, 1, 1, 1])])
    assert repring_identity_check(group) == (False, 1)


def test_repring_identity_holds_for_a_four_dimensional_minus_one_eigenspace():
    group = MatrixGroup([Matrix.diag(Q, [-1, -1, -1, -1, 1, 1, 1])])
    assert repring_identity_check(group) == (True, None)
