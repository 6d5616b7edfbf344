import random

import pytest

from g2lab.decide import (
    contained_in_g2_so, contained_in_g2_spin, eigen_square_check, spin_group_of, spin_preimage, spinor_trace_identities,
    twisted_containment
)
from g2lab.gallery import automorphism_pool
from g2lab.geometry import g2_spin_lift, nu, octonions, random_clifford_group_element, spin_lift, torus_spin_element
from g2lab.groups import MatrixGroup
from g2lab.scalars import FieldTower, Matrix


Q = FieldTower(1)
Q3 = FieldTower(3)


@pytest.fixture(scope='module')
def clifford():
    return octonions(Q).pure.clifford


def test_trivial_group_preimage(clifford):
    group = MatrixGroup([Matrix.identity(Q, 7)], name='trivial')
    preimage = spin_preimage(group)
    assert preimage.group.order == 2
    assert all(m.is_identity() for m in preimage.projection())
    containment = contained_in_g2_so(group, preimage)
    assert containment.contained
    # -1 acts by -1 on C, so only the sign character occurs
    assert containment.beta_index == 1
    assert containment.beta_multiplicity == 8


def test_minus_one_fixes_no_spinor(clifford):
    delta = spin_group_of([-clifford.one()], name='{1, -1}')
    assert delta.order == 2
    containment = contained_in_g2_spin(delta)
    assert not containment.contained
    assert containment.failing_index == 1
    assert containment.witness is None


def test_lifted_automorphisms_fix_a_spinor():
    lifts = [g2_spin_lift(phi).pure_element for phi in automorphism_pool(Q3)[:3]]
    containment = contained_in_g2_spin(spin_group_of(lifts))
    assert containment.contained
    assert containment.witness is not None


def test_single_type_g2_element_is_contained():
    group = MatrixGroup([Matrix.diag(Q, [-1, -1, -1, -1, 1, 1, 1])])
    assert contained_in_g2_so(group).contained


def test_projection_recovers_generators():
    group = MatrixGroup([Matrix.diag(Q, [-1, -1, 1, 1, 1, 1, 1]), Matrix.diag(Q, [1, 1, -1, -1, 1, 1, 1])])
    preimage = spin_preimage(group)
    assert preimage.group.order == 8
    tower = preimage.group.tower
    projected = {m.key() for m in preimage.projection()}
    assert projected == {g.coerce(tower).key() for g in group.elements}


@pytest.mark.parametrize('scale', [1, 2, -1])
def test_eigen_square_on_scalars(clifford, scale):
    report = eigen_square_check(clifford.scalar(Q(scale)))
    assert report.type_g2 and report.has_square_root_eigenvalue
    assert report.eigenvalue == scale
    assert report.identity_holds


def test_eigen_square_on_non_type_g2_element(clifford):
    lift = spin_lift(Matrix.diag(Q, [-1, -1, 1, 1, 1, 1, 1]), clifford)
    report = eigen_square_check(lift.element)
    assert not report.type_g2
    assert not report.has_square_root_eigenvalue
    assert report.eigenvalue is None


def test_trace_identities_at_one(clifford):
    identities = spinor_trace_identities(clifford.one())
    assert identities.symmetric == (36, 36)
    assert identities.exterior == (28, 28)
    assert identities.holds


@pytest.mark.parametrize('values', [(1, 2, 3, 5), (3, -1, 2, 7), (2, 1, 1, 1)])
def test_trace_identities_on_torus(values):
    gamma = torus_spin_element(*(Q(v) for v in values))
    assert spinor_trace_identities(gamma).holds


@pytest.mark.parametrize('x0, l1, l2', [(1, 2, 3), (3, -2, 5), (-2, 4, 7)])
@pytest.mark.parametrize('seed', [0, 1])
def test_eigen_square_on_conjugated_torus_elements(clifford, x0, l1, l2, seed):
    l1, l2 = Q(l1), Q(l2)
    t = torus_spin_element(Q(x0), l1, l2, (l1 * l2).inverse())
    g = random_clifford_group_element(clifford, random.Random(seed), factors=2)[0]
    gamma = g * t * g.inverse()
    report = eigen_square_check(gamma)
    assert report.type_g2 and report.has_square_root_eigenvalue
    assert report.eigenvalue * report.eigenvalue == nu(gamma) == x0 * x0
    assert report.identity_holds


@pytest.mark.parametrize('c', [1, 2, -3])
def test_eigen_square_on_scaled_automorphism_lifts(c):
    for phi in automorphism_pool(Q)[:4]:
        gamma = g2_spin_lift(phi).pure_element * Q(c)
        report = eigen_square_check(gamma)
        assert report.type_g2 and report.has_square_root_eigenvalue
        assert report.eigenvalue in (Q(c), Q(-c))
        assert report.identity_holds


def test_twisted_containment_of_trivial_group():
    rows = twisted_containment(MatrixGroup([Matrix.identity(Q, 7)], name='trivial'))
    assert [row.beta_index for row in rows] == [None, 0, 1]
    assert [row.multiplicity for row in rows] == [0, 0, 8]
    assert [row.spin.contained for row in rows] == [False, False, True]


def test_twisted_containment_of_non_type_g2_group():
    rows = twisted_containment(MatrixGroup([Matrix.diag(Q, [-1, -1, 1, 1, 1, 1, 1])]))
    assert len(rows) > 1
    assert not any(row.spin.contained or row.multiplicity for row in rows)


@pytest.mark.parametrize('name', ['alpha', 'beta-gl', 'mixed16', 'd8', 'torus-3-1'])
def test_twisted_containment_matches_multiplicities(gallery, name):
    group = gallery[name]
    preimage = spin_preimage(group)
    rows = twisted_containment(group, preimage)
    assert rows[0].beta_index is None and not rows[0].spin.contained
    for row in rows[1:]:
        assert row.spin.contained == (row.multiplicity > 0)
        if row.spin.contained:
            assert row.spin.witness is not None
        else:
            assert row.spin.failing_index is not None
    assert any(row.spin.contained for row in rows) == contained_in_g2_so(group, preimage).contained
