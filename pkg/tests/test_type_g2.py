import pytest
from hypothesis import given, settings, strategies as st

from g2lab.decide import (
    elementwise_type_g2, poly_is_type_g2, roots_are_type_g2, type_g2_symbolic_equivalence_check, type_g2_verdict
)
from g2lab.errors import NotMonicDegree7
from g2lab.gallery import torus_element
from g2lab.groups import MatrixGroup
from g2lab.scalars import FieldTower, Matrix, Poly, charpoly


Q = FieldTower(1)
Q4 = FieldTower(4)
Q12 = FieldTower(12)


def test_unipotent_polynomial():
    verdict = type_g2_verdict(Poly.from_roots(Q, [1] * 7))
    assert verdict
    assert verdict.abc == (6, 12, 8)
    assert verdict.reason is None


def test_order_four_roots():
    t = Poly.t(Q)
    p = (t - 1) * (t + 1) ** 2 * (t * t + 1) ** 2
    assert poly_is_type_g2(p)


def test_three_eigenvalues_one_is_not_enough():
    verdict = type_g2_verdict(Poly.from_roots(Q, [1] + [-1] * 6))
    assert not verdict
    assert verdict.reason == 'relation fails'
    assert verdict.abc == (-6, 12, -8)


def test_not_antipalindromic():
    p = Poly.from_roots(Q, [1] * 7)
    coeffs = [p.coeff(i) for i in range(8)]
    coeffs[0] = -coeffs[0]
    verdict = type_g2_verdict(Poly(Q, coeffs))
    assert not verdict
    assert verdict.reason == 'not antipalindromic'
    assert verdict.abc is None


@pytest.mark.parametrize('coeffs', [[1, 2, 3], [-2, 0, 0, 0, 0, 0, 0, 2]])
def test_rejects_non_monic_or_wrong_degree(coeffs):
    with pytest.raises(NotMonicDegree7):
        type_g2_verdict(Poly(Q, coeffs))


def test_symbolic_relation():
    assert type_g2_symbolic_equivalence_check()


roots_of_unity = st.lists(st.integers(0, 11), min_size=7, max_size=7)


@settings(max_examples=150, deadline=None)
@given(roots_of_unity)
def test_relation_agrees_with_brute_force(exponents):
    roots = [Q12.zeta(k) for k in exponents]
    assert poly_is_type_g2(Poly.from_roots(Q12, roots)) == roots_are_type_g2(roots)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 11), st.integers(0, 11))
def test_torus_elements_are_type_g2(a, b):
    assert poly_is_type_g2(charpoly(torus_element(Q12.zeta(a), Q12.zeta(b))))


def test_elementwise_reports_first_failure():
    group = MatrixGroup([Matrix.diag(Q, [-1, -1, 1, 1, 1, 1, 1])])
    assert elementwise_type_g2(group) == (False, 1)


def test_four_minus_ones_is_type_g2():
    group = MatrixGroup([Matrix.diag(Q, [-1, -1, -1, -1, 1, 1, 1])])
    assert elementwise_type_g2(group) == (True, None)


def test_cyclic_torus_group():
    i = Q4.zeta()
    group = MatrixGroup([torus_element(i, i)])
    assert group.order == 4
    assert elementwise_type_g2(group) == (True, None)
