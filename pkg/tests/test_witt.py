from g2lab.geometry import QuadSpace, SubspaceFlag, reference_space
from g2lab.groups import MatrixGroup, witt_index, witt_witness
from g2lab.scalars import FieldTower, Matrix

from small_groups import doubled, quaternion8, symmetric3


Q = FieldTower(1)
Q3 = FieldTower(3)
Q4 = FieldTower(4)


def assert_stable_isotropic(group, space, witness):
    tower = witness.basis[0][0].tower if witness.basis else space.tower
    space = space.coerce(tower)
    assert SubspaceFlag.of(space, witness.basis).totally_isotropic
    for g in group.generators:
        g = g.coerce(tower)
        stacked = Matrix(tower, list(witness.basis) + [g.apply(v) for v in witness.basis])
        assert stacked.rank() == len(witness.basis)


def test_trivial_group_on_reference_space():
    group = MatrixGroup([Matrix.identity(Q, 7)])
    space = reference_space()
    assert witt_index(group) == 3
    witness = witt_witness(group, space)
    assert witness.index == 3 and len(witness.basis) == 3
    assert witness.tower_extensions == ()
    assert_stable_isotropic(group, space, witness)


def test_permutation_module_is_anisotropic():
    group = symmetric3(Q3)
    space = QuadSpace(Matrix.identity(Q3, 3) * 2)
    assert witt_index(group) == 0
    assert witt_witness(group, space).basis == ()


def test_dual_pair_gives_isotropic_line():
    i = Q4.zeta()
    group = MatrixGroup([Matrix.diag(Q4, [i, -i, 1])])
    space = QuadSpace(Matrix(Q4, [[0, 1, 0], [1, 0, 0], [0, 0, 2]]))
    assert witt_index(group) == 1
    witness = witt_witness(group, space)
    assert len(witness.basis) == 1
    assert len(witness.chosen_components) == 1
    assert_stable_isotropic(group, space, witness)


def test_symplectic_constituent_with_even_multiplicity():
    group = doubled(quaternion8())
    j = Matrix(Q4, [[0, 1], [-1, 0]])
    space = QuadSpace(j.kron(j))
    assert witt_index(group) == 2
    witness = witt_witness(group, space)
    assert len(witness.basis) == 2
    assert_stable_isotropic(group, space, witness)


def test_subgroups_have_at_least_the_same_witt_index():
    big = symmetric3(Q3)
    small = MatrixGroup([big.generators[0]])
    assert witt_index(small) >= witt_index(big)
