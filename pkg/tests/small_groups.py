"""Small matrix groups shared by the group tests."""
from g2lab.groups import MatrixGroup
from g2lab.scalars import FieldTower, Matrix


Q = FieldTower(1)
Q4 = FieldTower(4)


def permutation(tower, perm):
    n = len(perm)
    return Matrix(tower, [[int(perm[j] == i) for j in range(n)] for i in range(n)])


def symmetric3(tower=Q):
    return MatrixGroup([permutation(tower, [1, 0, 2]), permutation(tower, [0, 2, 1])], name='S3')


def quaternion8():
    i = Q4.zeta()
    return MatrixGroup([Matrix.diag(Q4, [i, -i]), Matrix(Q4, [[0, 1], [-1, 0]])], name='Q8')


def doubled(group):
    """The representation g -> diag(g, g) as a group."""
    return MatrixGroup([Matrix.block_diag(g.tower, [g, g]) for g in group.generators], name=f'2x{group.name}')
