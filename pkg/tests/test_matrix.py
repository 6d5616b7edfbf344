from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from g2lab.errors import NonSquareMatrix, NotInvertible
from g2lab.scalars import FieldTower, Matrix, Poly, charpoly, kernel_basis, rank_mod_p


Q = FieldTower(1)
Q3 = FieldTower(3)

small = st.integers(-3, 3)


def square_matrices(tower, max_dim):
    def build(data):
        n, entries = data
        return Matrix(tower, [[entries[i * n + j] for j in range(n)] for i in range(n)])

    return st.integers(1, max_dim).flatmap(
        lambda n: st.tuples(st.just(n), st.lists(small, min_size=n * n, max_size=n * n))
    ).map(build)


def test_charpoly_of_identity():
    t = Poly.t(Q)
    assert charpoly(Matrix.identity(Q, 7)) == (t - 1) ** 7


def test_charpoly_of_diag_i():
    q4 = FieldTower(4)
    i = q4.zeta()
    t = Poly.t(q4)
    assert charpoly(Matrix.diag(q4, [i, -i])) == t * t + 1


@settings(max_examples=30, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=7))
def test_charpoly_of_companion_matrix(coeffs):
    p = Poly(Q, list(coeffs) + [1])
    assert charpoly(Matrix.companion(p)) == p


@settings(max_examples=20, deadline=None)
@given(square_matrices(Q, 6))
def test_cayley_hamilton_over_q(m):
    assert charpoly(m).evaluate_matrix(m).is_zero()


@settings(max_examples=10, deadline=None)
@given(square_matrices(Q3, 4))
def test_cayley_hamilton_over_cyclotomic_field(m):
    z = Q3.zeta()
    m = m + Matrix.identity(Q3, m.rows) * z
    assert charpoly(m).evaluate_matrix(m).is_zero()


def test_charpoly_rejects_rectangular_matrix():
    with pytest.raises(NonSquareMatrix):
        charpoly(Matrix(Q, [[1, 2, 3], [4, 5, 6]]))


def test_kernel_basis_examples():
    assert len(kernel_basis(Matrix.zeros(Q, 3, 3))) == 3
    assert kernel_basis(Matrix.identity(Q, 3)) == []
    cycle = Matrix(Q, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    (v,) = kernel_basis(cycle - Matrix.identity(Q, 3))
    assert v == (Q(1), Q(1), Q(1))


@settings(max_examples=20, deadline=None)
@given(square_matrices(Q, 5))
def test_inverse_and_determinant(m):
    if m.det().is_zero():
        with pytest.raises(NotInvertible):
            m.inverse()
        assert m.rank() < m.rows
    else:
        assert (m @ m.inverse()).is_identity()
        assert m.rank() == m.rows


def test_det_is_multiplicative():
    a = Matrix(Q, [[1, 2], [3, 4]])
    b = Matrix(Q, [[0, 1], [-1, Fraction(1, 2)]])
    assert (a @ b).det() == a.det() * b.det()


def test_kron_and_blocks():
    a = Matrix(Q, [[1, 2], [3, 4]])
    k = a.kron(Matrix.identity(Q, 2))
    assert k.rows == 4 and k[2, 0] == 3 and k[3, 1] == 3
    assert k.block(0, 2, 0, 2) == Matrix(Q, [[1, 0], [0, 1]])
    assert Matrix.block_diag(Q, [a, a]).block(2, 4, 2, 4) == a


def test_rank_mod_p_certifies_full_rank():
    assert rank_mod_p([[1, 0], [0, Fraction(1, 3)]]) == 2
    assert rank_mod_p([[1, 2], [2, 4]]) == 1


def test_polynomial_gcd_and_squarefree_part():
    t = Poly.t(Q)
    p = (t - 1) ** 2 * (t + 2)
    assert p.squarefree_part() == (t - 1) * (t + 2)
    assert p.gcd((t - 1) * (t - 5)) == t - 1
    q, r = divmod(p, t - 1)
    assert r.is_zero() and q == (t - 1) * (t + 2)


def test_resultant_with_square_detects_square_roots():
    t = Poly.t(Q)
    p = (t - 3) * (t + 5)
    assert p.resultant_with_square(9).is_zero()
    assert p.resultant_with_square(25).is_zero()
    assert not p.resultant_with_square(4).is_zero()
