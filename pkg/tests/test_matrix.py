from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from companionforms import GF, Q, Matrix, Polynomial, char_poly, kron, make_companion, mat_mul, mat_pow, unit_vector
from companionforms.errors import DimensionMismatch, FieldMismatch, NotSquare
from companionforms.matrix import hstack, poly_eval_matrix, powers, vstack
from companionforms.oracle import cofactor_char_poly, enumerate_matrices

from .conftest import field_and_square, fields, matrices


def M(field, rows):
    return Matrix(field, rows)


def test_mat_mul_example():
    A = M(Q, [[1, 2], [3, 4]])
    B = M(Q, [[0, 1], [1, 0]])
    assert mat_mul(A, B) == M(Q, [[2, 1], [4, 3]])
    assert A @ B == mat_mul(A, B)


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        mat_mul(M(Q, [[1, 2]]), M(Q, [[1, 2]]))
    with pytest.raises(DimensionMismatch):
        M(Q, [[1, 2], [3]])
    with pytest.raises(FieldMismatch):
        M(Q, [[1]]) + M(GF(2), [[1]])
    with pytest.raises(NotSquare):
        char_poly(M(Q, [[1, 2]]))


def test_entries_and_views():
    A = M(GF(5), [[1, 2, 3], [4, 5, 6]])
    assert A.shape == (2, 3)
    assert A[1, 2] == GF(5)(1)
    assert A.T.shape == (3, 2)
    assert A.col(1) == M(GF(5), [[2], [0]])
    assert A.submatrix(0, 2, 1, 3) == M(GF(5), [[2, 3], [0, 1]])
    assert hstack([A.col(0), A.col(1)]) == A.submatrix(0, 2, 0, 2)
    assert vstack([A, A]).shape == (4, 3)


def test_identity_and_units():
    I3 = Matrix.identity(3, Q)
    cols = [unit_vector(i, 3, Q) for i in range(3)]
    assert Matrix.from_columns(cols) == I3


def test_kron_example():
    S = M(Q, [[1, 2], [3, 4]])
    T = M(Q, [[0, 1], [1, 0]])
    assert kron(S, T) == M(
        Q,
        [[0, 1, 0, 2], [1, 0, 2, 0], [0, 3, 0, 4], [3, 0, 4, 0]],
    )


def test_mat_pow():
    N = M(Q, [[0, 1], [0, 0]])
    assert mat_pow(N, 0) == Matrix.identity(2, Q)
    assert mat_pow(N, 2).is_zero()
    A = M(Q, [[1, 1], [0, 1]])
    assert mat_pow(A, 5) == M(Q, [[1, 5], [0, 1]])
    assert powers(A, 3)[2] == mat_pow(A, 2)


def test_char_poly_examples():
    # [[2,1],[1,2]]: z^2 - 4z + 3
    assert char_poly(M(Q, [[2, 1], [1, 2]])) == Polynomial(Q, [3, -4, 1])
    assert char_poly(M(GF(5), [[3]])) == Polynomial(GF(5), [-3, 1])
    assert char_poly(Matrix.zeros(3, 3, Q)) == Polynomial(Q, [0, 0, 0, 1])


def test_polynomial_basics():
    p = Polynomial(Q, [1, 0, 0, 0])
    assert p.degree == 0
    assert Polynomial(Q, []).degree == -1
    a = Polynomial(Q, [1, 1])
    assert a * a == Polynomial(Q, [1, 2, 1])
    assert (a * a)(Q(2)) == Q(9)
    assert Polynomial(Q, [0, 0, 1]).is_monic
    assert not Polynomial(Q, [0, 0, 2]).is_monic


def test_poly_eval_matrix_example():
    A = M(Q, [[0, 1], [1, 0]])
    # 2 I + 3 A
    assert poly_eval_matrix([Q(2), Q(3)], A) == M(Q, [[2, 3], [3, 2]])


@given(st.data())
@settings(max_examples=60)
def test_mul_associative(data):
    f = data.draw(fields)
    a, b, c = (data.draw(st.integers(1, 3)) for _ in range(3))
    d = data.draw(st.integers(1, 3))
    A = data.draw(matrices(f, a, b))
    B = data.draw(matrices(f, b, c))
    C = data.draw(matrices(f, c, d))
    assert (A @ B) @ C == A @ (B @ C)


@given(st.data())
@settings(max_examples=40)
def test_kron_mixed_product(data):
    f = data.draw(fields)
    A = data.draw(matrices(f, 2))
    C = data.draw(matrices(f, 2))
    B = data.draw(matrices(f, 2, 1))
    D = data.draw(matrices(f, 1, 2))
    assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)


@given(field_and_square(max_n=5))
@settings(max_examples=80)
def test_berkowitz_matches_cofactor(fa):
    _, A = fa
    assert char_poly(A) == cofactor_char_poly(A)


@given(field_and_square(max_n=5))
@settings(max_examples=60)
def test_cayley_hamilton(fa):
    f, A = fa
    chi = char_poly(A)
    assert chi.is_monic and chi.degree == A.rows
    assert chi.eval_matrix(A) == Matrix.zeros(A.rows, A.rows, f)


@given(field_and_square(max_n=4))
def test_char_poly_trace_and_det(fa):
    f, A = fa
    n = A.rows
    chi = char_poly(A)
    trace = sum((A[i, i] for i in range(n)), f.zero)
    assert chi.coeff(n - 1) == -trace
    if n == 2:
        det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
        assert chi.coeff(0) == det


def test_berkowitz_all_gf2_3x3():
    for A in enumerate_matrices(GF(2), 3):
        assert char_poly(A) == cofactor_char_poly(A)


def test_rational_entries_stay_exact():
    A = M(Q, [[Fraction(1, 3), Fraction(2, 7)], [Fraction(-5, 2), 1]])
    chi = char_poly(A)
    assert chi.coeff(0).value == Fraction(1, 3) + Fraction(5, 7)


def test_polynomial_repr():
    assert repr(char_poly(make_companion([1, 2, 3], Q))) == "z^3 - 3*z^2 - 2*z - 1"
    assert repr(Polynomial(Q, [Fraction(1, 2), 0, -3])) == "-3*z^2 + 1/2"
    assert repr(Polynomial(Q, [])) == "0"
