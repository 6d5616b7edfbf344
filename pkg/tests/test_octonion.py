from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from g2lab.errors import NotAutomorphism
from g2lab.geometry import (
    embed_pure, ell_generator, ell_iso_check, fixed_anisotropic_spinor, g2_spin_lift, is_g2_automorphism,
    is_related_triple, isometry_class, nu, octonions, pi_action, reference_space, so_from_spinor, spin_rep,
    spin_rep_from_vectors, spin_rep_odd, torus_spin_element
)
from g2lab.scalars import FieldTower, Matrix, Poly, charpoly


Q = FieldTower(1)
O = octonions(Q)
CP = O.pure.clifford

small = st.integers(-3, 3)
octonion_values = st.lists(small, min_size=8, max_size=8).map(O.element)
pure_vectors = st.lists(small, min_size=7, max_size=7).map(lambda xs: tuple(Q(x) for x in xs))
anisotropic_pure = pure_vectors.filter(lambda p: not O.pure.space.q(p).is_zero())


def torus_automorphism(l1, l2):
    """diag(1, D, D^-1, 1) with det D = 1 is an automorphism of the Zorn algebra."""
    l3 = 1 / (Fraction(l1) * l2)
    return Matrix.diag(Q, [1, l1, l2, l3, 1 / Fraction(l1), 1 / Fraction(l2), 1 / l3, 1])


def cyclic_automorphism():
    """Simultaneous cyclic shift of the u and v coordinates."""
    perm = [0, 2, 3, 1, 5, 6, 4, 7]
    return Matrix(Q, [[int(perm[j] == i) for j in range(8)] for i in range(8)])


@settings(max_examples=40, deadline=None)
@given(octonion_values, octonion_values)
def test_composition_law_and_unit(x, y):
    assert (x * y).q() == x.q() * y.q()
    assert O.e * x == x == x * O.e


@settings(max_examples=40, deadline=None)
@given(octonion_values, octonion_values)
def test_alternativity(x, y):
    assert x * (x * y) == (x * x) * y
    assert (y * x) * x == y * (x * x)


@settings(max_examples=30, deadline=None)
@given(octonion_values)
def test_conjugation(x):
    assert x * x.conjugate() == O.e * x.q()
    assert x.conjugate() == O.e * O.beta(x, O.e) - x


def test_pure_space_is_the_negated_reference_space():
    assert O.pure.space.gram == reference_space().gram * -1
    for p in O.pure.basis_in_c:
        assert O.beta(O.element(p), O.e) == 0
        assert O.element(p).conjugate() == -O.element(p)


def test_ell_of_unit_swaps_summands():
    swap = Matrix(Q, [[int(j == (i + 8) % 16) for j in range(16)] for i in range(16)])
    assert ell_generator(O.e) == swap


@settings(max_examples=20, deadline=None)
@given(octonion_values)
def test_ell_squares_to_norm(x):
    m = ell_generator(x)
    assert m @ m == Matrix.identity(Q, 16) * x.q()


@settings(max_examples=15, deadline=None)
@given(octonion_values, octonion_values, octonion_values, octonion_values)
def test_ell_products_of_two_vectors(v, w, a, b):
    image = (ell_generator(v) @ ell_generator(w)).apply(a.coords + b.coords)
    assert image[:8] == (v * (w.conjugate() * a)).coords
    assert image[8:] == (v.conjugate() * (w * b)).coords


def test_ell_extends_to_graded_isomorphism():
    report = ell_iso_check()
    assert report.rank == 256
    assert report.graded
    assert report.dependent_mask is None
    assert report.passed


def test_spin_rep_of_scalars_and_squares():
    assert spin_rep(CP.one()).is_identity()
    p = tuple(Q(x) for x in (1, 2, 0, 0, 0, 0, 1))
    v = CP.vector(p)
    assert spin_rep(v * v) == Matrix.identity(Q, 8) * O.pure.space.q(p)


@settings(max_examples=10, deadline=None)
@given(anisotropic_pure, anisotropic_pure, anisotropic_pure, anisotropic_pure)
def test_spin_rep_matches_direct_products(p1, p2, p3, p4):
    gamma = CP.vector(p1) * CP.vector(p2)
    delta = CP.vector(p3) * CP.vector(p4)
    octs = [O.pure.octonion(p) for p in (p1, p2, p3, p4)]
    assert spin_rep(gamma) == spin_rep_from_vectors(octs[:2])
    assert spin_rep(gamma * delta) == spin_rep(gamma) @ spin_rep(delta)
    assert spin_rep(gamma * delta) == spin_rep_from_vectors(octs)
    assert isometry_class(spin_rep(gamma), O.space).factor == nu(gamma)


@settings(max_examples=8, deadline=None)
@given(anisotropic_pure, anisotropic_pure)
def test_spinor_image_recovers_rotation(p1, p2):
    gamma = CP.vector(p1) * CP.vector(p2)
    assert so_from_spinor(spin_rep(gamma)) == pi_action(gamma)


@settings(max_examples=8, deadline=None)
@given(octonion_values, octonion_values)
def test_triality_triple(x, y):
    assume(not x.q().is_zero() and not y.q().is_zero())
    gamma = O.clifford.product_of_vectors([x.coords, y.coords])
    t1 = pi_action(gamma)
    assert is_related_triple(t1, spin_rep(gamma), spin_rep_odd(gamma) * (1 / nu(gamma)))


def test_triality_triple_of_pure_element():
    gamma = CP.vector([Q(x) for x in (1, 1, 0, 0, 0, 0, 0)]) * CP.vector([Q(x) for x in (0, 0, 1, 0, 2, 0, 1)])
    assert is_related_triple(pi_action(embed_pure(gamma)), spin_rep(gamma), spin_rep_odd(gamma) * (1 / nu(gamma)))


def test_related_triple_examples():
    one = Matrix.identity(Q, 8)
    assert is_related_triple(one, one, one)
    assert is_related_triple(one, one * 2, one * Fraction(1, 2))
    assert not is_related_triple(one, one * 2, one * 2)


def test_automorphism_examples():
    assert is_g2_automorphism(Matrix.identity(Q, 8))
    assert not is_g2_automorphism(-Matrix.identity(Q, 8))
    assert not is_g2_automorphism(O.conjugation)
    assert is_g2_automorphism(torus_automorphism(2, 3))
    assert is_g2_automorphism(cyclic_automorphism())


def test_g2_spin_lift_of_identity():
    lift = g2_spin_lift(Matrix.identity(Q, 8))
    assert lift.element == O.clifford.one()
    assert lift.pure_element == CP.one()


@pytest.mark.parametrize('phi', [torus_automorphism(2, 3), cyclic_automorphism()])
def test_g2_spin_lift(phi):
    lift = g2_spin_lift(phi)
    assert nu(lift.element) == 1
    assert spin_rep(lift.pure_element) == phi
    rotation = pi_action(lift.pure_element)
    assert rotation == so_from_spinor(phi)
    assert isometry_class(rotation, O.pure.space).proper


def test_g2_spin_lift_rejects_non_automorphisms():
    with pytest.raises(NotAutomorphism):
        g2_spin_lift(Matrix.identity(Q, 8) * 2)


def test_fixed_anisotropic_spinor():
    one = Matrix.identity(Q, 8)
    v = fixed_anisotropic_spinor([one])
    assert v is not None and not O.space.q(v).is_zero()
    assert fixed_anisotropic_spinor([one, -one]) is None
    automorphisms = [torus_automorphism(2, 3), cyclic_automorphism()]
    w = fixed_anisotropic_spinor(automorphisms)
    assert w is not None and not O.space.q(w).is_zero()
    assert all(m.apply(w) == w for m in automorphisms)


def test_torus_spin_element():
    x0, l1, l2, l3 = Q(Fraction(1, 2)), Q(2), Q(3), Q(5)
    gamma = torus_spin_element(x0, l1, l2, l3)
    assert nu(gamma) == x0 * x0
    roots = [x0 * l1 ** a * l2 ** b * l3 ** c for a in (1, -1) for b in (1, -1) for c in (1, -1)]
    assert charpoly(spin_rep(gamma)) == Poly.from_roots(Q, roots)
