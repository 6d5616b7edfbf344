import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from g2lab.errors import AlgebraMismatch, NotHomogeneous, NotProperIsometry
from g2lab.geometry import (
    CliffordAlgebra, cl_transpose, hyperbolic, nu, pi_action, random_clifford_group_element, reference_space,
    reflection, spin_lift
)
from g2lab.scalars import FieldTower, Matrix


Q = FieldTower(1)
E7 = reference_space()
CL = CliffordAlgebra(E7)

vectors7 = st.lists(st.integers(-3, 3), min_size=7, max_size=7).map(lambda xs: tuple(Q(x) for x in xs))
anisotropic7 = vectors7.filter(lambda v: not E7.q(v).is_zero())


def elements(algebra, max_terms=6):
    return st.dictionaries(
        st.integers(0, 2 ** algebra.n - 1), st.integers(-3, 3), max_size=max_terms
    ).map(algebra.element)


def test_unit_and_generator_relations():
    b1, b2 = CL.generator(0), CL.generator(1)
    d1, d2 = CL.values[0], CL.values[1]
    x = b1 + b2 * 3
    assert CL.one() * x == x == x * CL.one()
    assert b1 * b1 == CL.scalar(d1)
    assert (b1 * b2) * (b1 * b2) == CL.scalar(-(d1 * d2))
    assert b1 * b2 == -(b2 * b1)


@settings(max_examples=30, deadline=None)
@given(vectors7)
def test_vector_squares_to_its_norm(v):
    x = CL.vector(v)
    assert x * x == CL.scalar(E7.q(v))
    assert CL.vector_part(x) == v


@settings(max_examples=20, deadline=None)
@given(elements(CL), elements(CL), elements(CL))
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@settings(max_examples=20, deadline=None)
@given(elements(CL), elements(CL))
def test_transpose_is_an_anti_involution(x, y):
    assert cl_transpose(x * y) == cl_transpose(y) * cl_transpose(x)
    assert cl_transpose(cl_transpose(x)) == x


def test_transpose_examples():
    b1, b2 = CL.generator(0), CL.generator(1)
    assert cl_transpose(b1 * b2) == b2 * b1 == -(b1 * b2)
    v = CL.vector([Q(x) for x in (1, 2, 0, 0, 0, -1, 3)])
    assert cl_transpose(v) == v


def test_mixing_algebras_is_rejected():
    other = CliffordAlgebra(hyperbolic(1))
    with pytest.raises(AlgebraMismatch):
        CL.one() * other.one()


def test_pi_action_of_scalars_vectors_and_products():
    assert pi_action(CL.scalar(5)).is_identity()
    v = tuple(Q(x) for x in (1, 1, 0, 0, 0, 0, 1))
    w = tuple(Q(x) for x in (0, 0, 2, 1, 0, 0, -1))
    assert pi_action(CL.vector(v)) == reflection(v, E7)
    assert pi_action(CL.vector(v) * CL.vector(w)) == reflection(v, E7) @ reflection(w, E7)
    with pytest.raises(NotHomogeneous):
        pi_action(CL.one() + CL.vector(v))


def test_nu_examples():
    v = tuple(Q(x) for x in (1, 1, 0, 0, 0, 0, 1))
    w = tuple(Q(x) for x in (0, 0, 2, 1, 0, 0, -1))
    assert nu(CL.scalar(3)) == 9
    assert nu(CL.vector(v)) == E7.q(v)
    assert nu(CL.vector(v) * CL.vector(w)) == E7.q(v) * E7.q(w)


def test_spin_lift_of_identity():
    lift = spin_lift(Matrix.identity(Q, 7), CL)
    assert lift.element == CL.one()
    assert lift.reflections == () and lift.tower_extensions == ()


def test_spin_lift_rejects_reflections():
    v = tuple(Q(x) for x in (1, 1, 0, 0, 0, 0, 1))
    with pytest.raises(NotProperIsometry):
        spin_lift(reflection(v, E7), CL)


@settings(max_examples=15, deadline=None)
@given(st.lists(anisotropic7, min_size=2, max_size=6))
def test_spin_lift_round_trip(vectors):
    assume(len(vectors) % 2 == 0)
    g = Matrix.identity(Q, 7)
    for v in vectors:
        g = g @ reflection(v, E7)
    lift = spin_lift(g, CL)
    gamma = lift.element
    assert gamma.is_even()
    assert nu(gamma) == 1
    assert pi_action(gamma) == g
    assert pi_action(-gamma) == g


@pytest.mark.parametrize('seed', range(4))
def test_kernel_of_pi_consists_of_scalars(seed):
    rng = random.Random(seed)
    gamma, _ = random_clifford_group_element(CL, rng, factors=2 + 2 * (seed % 2))
    delta = spin_lift(pi_action(gamma), CL).element
    gamma = gamma.coerce(delta.algebra)
    ratio = delta * gamma.inverse()
    assert ratio.is_scalar()
    assert nu(gamma * delta) == nu(gamma) * nu(delta)
