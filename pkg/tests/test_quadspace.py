from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from g2lab.errors import IsotropicVector, NotSimilitude, TowerMismatch
from g2lab.geometry import (
    QuadSpace, SubspaceFlag, congruence_diagonalize, find_isometry, hyperbolic, isometry_class, line,
    orth_sum, reference_space, reflection
)
from g2lab.scalars import FieldTower, Matrix


Q = FieldTower(1)
E7 = reference_space()

vectors7 = st.lists(st.integers(-3, 3), min_size=7, max_size=7).map(lambda xs: tuple(Q(x) for x in xs))


def test_hyperbolic_plane():
    h = hyperbolic(1)
    assert hyperbolic(0).dim == 0
    assert h.q((Q(1), Q(0))) == 0
    assert h.beta((Q(1), Q(0)), (Q(0), Q(1))) == 1


def test_reference_space_layout():
    assert E7.dim == 7
    assert E7.gram == orth_sum(hyperbolic(3), line(1)).gram
    assert E7.q(E7.basis()[6]) == 1
    assert all(E7.q(b) == 0 for b in E7.basis()[:6])


def test_orth_sum_with_zero_space_and_tower_mismatch():
    x = line(3)
    assert orth_sum(x, hyperbolic(0)) == x
    assert orth_sum(line(1), hyperbolic(2)).dim == 5
    with pytest.raises(TowerMismatch):
        orth_sum(line(1), line(1, FieldTower(4)))


def test_isometry_class_examples():
    h = hyperbolic(1)
    assert isometry_class(Matrix.identity(Q, 2), h).proper
    minus = isometry_class(Matrix.diag(Q, [-1, -1]), h)
    assert minus.factor == 1 and minus.proper
    stretch = isometry_class(Matrix.diag(Q, [2, Fraction(1, 2)]), h)
    assert stretch.factor == 1 and stretch.proper
    similitude = isometry_class(Matrix.diag(Q, [3, 1]), h)
    assert similitude.factor == 3 and similitude.proper
    with pytest.raises(NotSimilitude):
        isometry_class(Matrix(Q, [[1, 1], [0, 1]]), h)


def test_reflection_examples():
    v = (1, 1, 0, 0, 0, 0, 1)
    v = tuple(Q(x) for x in v)
    r = reflection(v, E7)
    assert r.apply(v) == tuple(-x for x in v)
    w = (Q(1), Q(-1), Q(0), Q(0), Q(0), Q(0), Q(0))
    assert E7.beta(v, w) == 0
    assert r.apply(w) == w
    similitude = isometry_class(r, E7)
    assert similitude.factor == 1 and not similitude.proper
    assert (r @ r).is_identity()
    with pytest.raises(IsotropicVector):
        reflection(E7.basis()[0], E7)


@settings(max_examples=25, deadline=None)
@given(vectors7, vectors7)
def test_product_of_two_reflections_is_special_orthogonal(v, w):
    assume(not E7.q(v).is_zero() and not E7.q(w).is_zero())
    similitude = isometry_class(reflection(v, E7) @ reflection(w, E7), E7)
    assert similitude.factor == 1 and similitude.proper


def test_congruence_diagonalize_reference_space():
    basis, values = congruence_diagonalize(E7)
    assert len(basis) == 7
    assert all(not v.is_zero() for v in values)
    for i in range(7):
        assert E7.q(basis[i]) == values[i]
        for j in range(i + 1, 7):
            assert E7.beta(basis[i], basis[j]).is_zero()


def test_hyperbolic_space_has_isotropic_subspaces_of_half_dimension():
    h = hyperbolic(3)
    basis = h.basis()
    flag = SubspaceFlag.of(h, [basis[0], basis[2], basis[4]])
    assert flag.totally_isotropic and not flag.nondegenerate
    bigger = SubspaceFlag.of(h, [basis[0], basis[2], basis[4], basis[1]])
    assert not bigger.totally_isotropic
    with pytest.raises(ValueError):
        SubspaceFlag.of(h, [basis[0], basis[0]])


def test_find_isometry_adjoins_square_root():
    iso = find_isometry(line(2), line(1))
    t = iso.matrix
    tower = t.tower
    assert iso.tower_extensions == (Q(2),)
    assert t.transpose() @ line(1).gram.coerce(tower) @ t == line(2).gram.coerce(tower)


def test_find_isometry_between_congruent_forms():
    source = QuadSpace(Matrix(Q, [[2, 1], [1, 2]]))
    target = QuadSpace(Matrix(Q, [[2, 0], [0, 6]]))
    iso = find_isometry(source, target)
    t = iso.matrix
    assert t.transpose() @ target.gram.coerce(t.tower) @ t == source.gram.coerce(t.tower)
