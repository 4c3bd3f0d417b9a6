from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exactla import Field, Matrix, column_space, hstack, inverse, kernel, kron, quotient_map, rank, rref, solve
from src.exceptions import DimensionMismatch, FieldMismatch, SingularMatrix

Q = Field(0)
F2 = Field(2)
F3 = Field(3)
LARGE = Field(2 ** 31 - 1)


@st.composite
def matrices(draw, field, max_rows=4, max_cols=4, rows=None, cols=None):
    rows = draw(st.integers(1, max_rows)) if rows is None else rows
    cols = draw(st.integers(1, max_cols)) if cols is None else cols
    entries = draw(st.lists(st.integers(-4, 4), min_size=rows * cols, max_size=rows * cols))
    return Matrix.from_rows(field, np.array(entries).reshape(rows, cols).tolist())


fields = st.sampled_from([Q, F2, F3, LARGE])


def test_field_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        Field(4)


def test_field_elements():
    assert Q.element('3/4') == Fraction(3, 4)
    assert Field(5).element('3/4') == 2
    assert F3.element(-1) == 2
    with pytest.raises(ZeroDivisionError):
        F3.element('1/3')


def test_large_prime_uses_python_integers():
    assert LARGE.dtype is object
    assert Field(1000003).dtype is np.int64
    M = Matrix.from_rows(LARGE, [[2, 0], [0, 3]])
    assert inverse(M) @ M == Matrix.identity(LARGE, 2)
    K = kernel(Matrix.from_rows(LARGE, [[1, 2, 3]]))
    assert K.cols == 2
    assert (Matrix.from_rows(LARGE, [[1, 2, 3]]) @ K).is_zero()
    assert Matrix.from_rows(LARGE, [[-1]]).values[0, 0] == 2 ** 31 - 2


def test_format():
    M = Matrix.from_rows(Q, [['1/2', 1], [0, -3]])
    assert M.format() == '[[1/2,1],[0,-3]]'
    assert Matrix.from_rows(F3, [[-1, 4]]).format() == '[[2,1]]'


def test_solve_identity():
    solution = solve(Matrix.identity(Q, 2), Matrix.column(Q, [3, 5]))
    assert solution.particular == Matrix.column(Q, [3, 5])
    assert solution.kernel.cols == 0


def test_solve_with_kernel_over_f2():
    solution = solve(Matrix.from_rows(F2, [[1, 1], [1, 1]]), Matrix.column(F2, [1, 1]))
    assert solution.particular == Matrix.column(F2, [1, 0])
    assert solution.kernel == Matrix.column(F2, [1, 1])


def test_solve_inconsistent():
    assert solve(Matrix.zeros(Q, 2, 2), Matrix.column(Q, [1, 0])) is None


def test_solve_rejects_wrong_height():
    with pytest.raises(DimensionMismatch):
        solve(Matrix.identity(Q, 2), Matrix.column(Q, [1, 2, 3]))


def test_kernel_examples():
    assert kernel(Matrix.identity(Q, 3)).cols == 0
    assert kernel(Matrix.from_rows(Q, [[1, 2]])) == Matrix.column(Q, [-2, 1])
    assert kernel(Matrix.zeros(Q, 2, 3)).cols == 3


def test_kron_examples():
    assert kron(Matrix.identity(Q, 2), Matrix.identity(Q, 3)) == Matrix.identity(Q, 6)
    assert kron(Matrix.from_rows(Q, [[0, 1], [0, 0]]), Matrix.from_rows(Q, [[2]])) == \
        Matrix.from_rows(Q, [[0, 2], [0, 0]])


def test_mixed_fields_are_rejected():
    with pytest.raises(FieldMismatch):
        Matrix.identity(Q, 2) + Matrix.identity(F3, 2)


def test_singular_inverse():
    with pytest.raises(SingularMatrix):
        inverse(Matrix.from_rows(F3, [[1, 2], [2, 1]]))


def test_vec_is_row_major():
    M = Matrix.from_rows(Q, [[1, 2], [3, 4]])
    assert M.vec() == Matrix.column(Q, [1, 2, 3, 4])


@settings(max_examples=50, deadline=None)
@given(st.data(), fields)
def test_solve_reproduces_right_hand_side(data, field):
    M = data.draw(matrices(field))
    x = data.draw(matrices(field, max_cols=2, rows=M.cols))
    solution = solve(M, M @ x)
    assert solution is not None
    assert M @ solution.particular == M @ x
    assert (M @ solution.kernel).is_zero()
    assert rank(M) + solution.kernel.cols == M.cols


@settings(max_examples=50, deadline=None)
@given(st.data(), fields)
def test_rref_is_idempotent(data, field):
    M = data.draw(matrices(field))
    R, pivots = rref(M)
    again, again_pivots = rref(R)
    assert again == R
    assert again_pivots == pivots
    assert column_space(M).cols == len(pivots)


@settings(max_examples=50, deadline=None)
@given(st.data(), fields)
def test_quotient_map(data, field):
    U = data.draw(matrices(field, max_rows=5))
    quotient = quotient_map(U)
    assert (quotient.projection @ U).is_zero()
    assert quotient.projection @ quotient.section == Matrix.identity(field, quotient.dim)
    assert quotient.dim == U.rows - rank(U)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_kron_mixed_product(data):
    A, B, C, D = (data.draw(matrices(F3, rows=2, cols=2)) for _ in range(4))
    assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)


@settings(max_examples=30, deadline=None)
@given(st.data(), fields)
def test_inverse_of_invertible(data, field):
    M = data.draw(matrices(field, rows=3, cols=3))
    if rank(M) < M.rows:
        with pytest.raises(SingularMatrix):
            inverse(M)
    else:
        assert inverse(M) @ M == Matrix.identity(field, M.rows)


def test_random_array_is_seeded():
    first = F3.random_array(np.random.default_rng(7), (3, 2))
    second = F3.random_array(np.random.default_rng(7), (3, 2))
    assert first.shape == (3, 2)
    assert np.array_equal(first, second)
    assert hstack([Matrix(F3, first), Matrix(F3, second)]).cols == 4
