"""Exact dense linear algebra over F_p and Q.

A ``Matrix`` is a numpy array together with the field its entries live in.
Residues mod p are stored as int64 while products of two entries cannot
overflow, and as Python ints otherwise; rationals are ``fractions.Fraction``
objects in object arrays, so no rounding ever happens.

Row reduction always pivots on the first nonzero entry in column order, which
makes every basis returned by this module reproducible. Kronecker products
follow ``numpy.kron``: for spaces of dimensions (m, n) the pair (i, j) has
index i * n + j, and a matrix X is vectorised row by row.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import isprime

from src.exceptions import DimensionMismatch, FieldMismatch, SingularMatrix

logger = logging.getLogger(__name__)

# primes below this bound keep their residues in int64 arrays
INT64_PRIME_LIMIT = 2 ** 20


@dataclass(frozen=True)
class Field:
    """The ground field: Q for characteristic 0, F_p otherwise."""
    characteristic: int

    def __post_init__(self):
        if self.characteristic < 0 or (self.characteristic > 0 and not isprime(self.characteristic)):
            raise ValueError(f'Field characteristic must be 0 or prime, got {self.characteristic}')

    def __str__(self):
        return 'Q' if self.is_rational else f'F_{self.characteristic}'

    @property
    def is_rational(self):
        return self.characteristic == 0

    @property
    def dtype(self):
        if 0 < self.characteristic < INT64_PRIME_LIMIT:
            return np.int64
        return object

    def element(self, value):
        """Canonical representative of an int, a Fraction, a Scalar or a string such as '3/4'.

        Parameters
        ----------
        value : int, Fraction, str or Scalar
            the value to convert

        Returns
        -------
        Fraction or int
            reduced fraction over Q, residue in [0, p) over F_p
        """
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f'Scalar over {value.field} used over {self}')
            return value.value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            return Fraction(value) if self.is_rational else value % self.characteristic
        fraction = Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
        if self.is_rational:
            return fraction
        p = self.characteristic
        denominator = fraction.denominator % p
        if denominator == 0:
            raise ZeroDivisionError(f'{value} has no residue modulo {p}')
        return (fraction.numerator * pow(denominator, -1, p)) % p

    def scalar(self, value):
        return Scalar(self, self.element(value))

    def inverse(self, value):
        value = self.element(value)
        if value == 0:
            raise ZeroDivisionError(f'0 is not invertible in {self}')
        if self.is_rational:
            return 1 / value
        return pow(int(value), -1, self.characteristic)

    def format(self, value):
        value = self.element(value)
        return str(value) if self.is_rational else str(int(value))

    def array(self, values):
        raw = np.array(values, dtype=object)
        out = np.empty(raw.shape, dtype=object)
        for index, value in np.ndenumerate(raw):
            out[index] = self.element(value)
        return out if self.dtype is object else out.astype(self.dtype)

    def reduce(self, values):
        if self.is_rational:
            return values
        return np.mod(values, self.characteristic)

    def zeros(self, shape):
        if self.is_rational:
            return np.full(shape, Fraction(0), dtype=object)
        return np.zeros(shape, dtype=self.dtype)

    def random_array(self, rng, shape):
        """Seeded random entries; small integers over Q so that coordinates stay readable."""
        if self.is_rational:
            draws = rng.integers(-3, 4, size=shape)
        else:
            draws = rng.integers(0, self.characteristic, size=shape)
        return self.array(draws.tolist()).reshape(shape)


@dataclass(frozen=True, eq=False)
class Scalar:
    field: Field
    value: object

    def _coerce(self, other):
        return self.field.element(other)

    def _make(self, value):
        return Scalar(self.field, self.field.element(value))

    def __add__(self, other):
        return self._make(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._make(self.value - self._coerce(other))

    def __rsub__(self, other):
        return self._make(self._coerce(other) - self.value)

    def __mul__(self, other):
        return self._make(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._make(self.value * self.field.inverse(other))

    def __neg__(self):
        return self._make(-self.value)

    def __eq__(self, other):
        try:
            return self.value == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f'Scalar({self} in {self.field})'


class Matrix:
    """Immutable matrix over a Field."""
    __slots__ = ('field', 'values')

    def __init__(self, field, values):
        values = np.asarray(values)
        if values.ndim != 2:
            raise DimensionMismatch(f'Matrix needs a 2-dimensional array, got shape {values.shape}')
        if field.is_rational:
            if values.dtype != object:
                values = field.array(values.tolist()).reshape(values.shape)
            else:
                values = values.copy()
        elif field.dtype is object:
            values = np.mod(values.astype(object), field.characteristic)
        else:
            if values.dtype != np.int64:
                values = np.mod(values.astype(object), field.characteristic).astype(np.int64)
            values = np.mod(values, field.characteristic)
        values.setflags(write=False)
        self.field = field
        self.values = values

    # ===== constructors =====
    @classmethod
    def from_rows(cls, field, rows, cols=None):
        values = field.array(rows)
        if values.size == 0:
            values = field.zeros((len(rows), cols or 0))
        return cls(field, values)

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, field.zeros((rows, cols)))

    @classmethod
    def identity(cls, field, n):
        values = field.zeros((n, n))
        np.fill_diagonal(values, field.element(1))
        return cls(field, values)

    @classmethod
    def column(cls, field, entries):
        return cls(field, field.array(list(entries)).reshape(-1, 1))

    @classmethod
    def row(cls, field, entries):
        return cls(field, field.array(list(entries)).reshape(1, -1))

    # ===== shape =====
    @property
    def rows(self):
        return self.values.shape[0]

    @property
    def cols(self):
        return self.values.shape[1]

    @property
    def shape(self):
        return self.values.shape

    @property
    def T(self):
        return Matrix(self.field, self.values.T)

    def reshape(self, rows, cols):
        return Matrix(self.field, self.values.reshape(rows, cols))

    def vec(self):
        """Row-major vectorisation as a column."""
        return self.reshape(self.rows * self.cols, 1)

    # ===== arithmetic =====
    def _check_field(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f'Expected Matrix, got {type(other).__name__}')
        if other.field != self.field:
            raise FieldMismatch(f'{self.field} matrix combined with {other.field} matrix')

    def __matmul__(self, other):
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f'Cannot multiply {self.shape} by {other.shape}')
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, self.values @ other.values)

    def __add__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f'Cannot add {self.shape} and {other.shape}')
        return Matrix(self.field, self.values + other.values)

    def __sub__(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f'Cannot subtract {other.shape} from {self.shape}')
        return Matrix(self.field, self.values - other.values)

    def __neg__(self):
        return Matrix(self.field, -self.values)

    def scale(self, factor):
        factor = self.field.element(factor)
        if self.field.dtype is not object:
            factor = int(factor)
        return Matrix(self.field, self.values * factor)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and np.array_equal(self.values, other.values)

    __hash__ = None

    # ===== access =====
    def __getitem__(self, key):
        result = self.values[key]
        if np.ndim(result) == 2:
            return Matrix(self.field, result)
        if np.ndim(result) == 0:
            return self.field.scalar(result)
        raise IndexError('Matrix indexing must keep two axes or select a single entry')

    def entry(self, i, j):
        return self.field.scalar(self.values[i, j])

    def is_zero(self):
        return not np.any(self.values)

    def trace(self):
        return self.field.scalar(sum(self.values.diagonal().tolist()))

    # ===== output =====
    def to_strings(self):
        return [[self.field.format(value) for value in row] for row in self.values.tolist()]

    def format(self):
        return '[' + ','.join('[' + ','.join(row) + ']' for row in self.to_strings()) + ']'

    def __repr__(self):
        return f'Matrix({self.format()} over {self.field})'


@dataclass(frozen=True)
class Solution:
    """One particular solution of Mx = b and a basis (as columns) of the kernel of M."""
    particular: Matrix
    kernel: Matrix


@dataclass(frozen=True)
class Quotient:
    """Linear data of the quotient of k^d by the span W of some columns.

    ``projection`` (q x d) annihilates exactly W, ``section`` (d x q) picks standard
    basis vectors completing a basis of W, and projection @ section = 1.
    """
    subspace: Matrix
    projection: Matrix
    section: Matrix

    @property
    def dim(self):
        return self.section.cols


def hstack(blocks):
    if not blocks:
        raise ValueError('hstack needs at least one block')
    field = blocks[0].field
    for block in blocks:
        blocks[0]._check_field(block)
        if block.rows != blocks[0].rows:
            raise DimensionMismatch('hstack blocks must have equal row counts')
    return Matrix(field, np.hstack([block.values for block in blocks]))


def vstack(blocks):
    if not blocks:
        raise ValueError('vstack needs at least one block')
    field = blocks[0].field
    for block in blocks:
        blocks[0]._check_field(block)
        if block.cols != blocks[0].cols:
            raise DimensionMismatch('vstack blocks must have equal column counts')
    return Matrix(field, np.vstack([block.values for block in blocks]))


def block_diagonal(field, blocks):
    rows = sum(block.rows for block in blocks)
    cols = sum(block.cols for block in blocks)
    values = field.zeros((rows, cols))
    r = c = 0
    for block in blocks:
        values[r:r + block.rows, c:c + block.cols] = block.values
        r += block.rows
        c += block.cols
    return Matrix(field, values)


def _rref_values(field, values, pivot_limit):
    R = np.array(values, copy=True)
    m = R.shape[0]
    pivots = []
    row = 0
    for col in range(pivot_limit):
        if row == m:
            break
        nonzero = np.flatnonzero(R[row:, col])
        if nonzero.size == 0:
            continue
        found = row + nonzero[0]
        if found != row:
            R[[row, found]] = R[[found, row]]
        R[row] = field.reduce(R[row] * field.inverse(R[row, col]))
        others = np.flatnonzero(R[:, col])
        others = others[others != row]
        if others.size:
            R[others] = field.reduce(R[others] - np.outer(R[others, col], R[row]))
        pivots.append(col)
        row += 1
    return R, pivots


def rref(M, pivot_limit=None):
    """Reduced row echelon form, pivoting on the first nonzero entry in column order.

    Parameters
    ----------
    M : Matrix
        matrix to reduce
    pivot_limit : int, optional
        only the first ``pivot_limit`` columns may hold pivots; row operations
        still act on the full width

    Returns
    -------
    tuple
        (R, pivots) with R a Matrix and pivots the list of pivot columns
    """
    limit = M.cols if pivot_limit is None else pivot_limit
    R, pivots = _rref_values(M.field, M.values, limit)
    return Matrix(M.field, R), pivots


def rank(M):
    return len(_rref_values(M.field, M.values, M.cols)[1])


def _kernel_from_rref(field, R, pivots, n):
    free = [c for c in range(n) if c not in set(pivots)]
    K = field.zeros((n, len(free)))
    if free:
        K[free, list(range(len(free)))] = field.element(1)
        if pivots:
            K[pivots, :] = field.reduce(-R[:len(pivots)][:, free])
    return Matrix(field, K)


def kernel(M):
    """Basis of the null space of M, one vector per free column, as the columns of a matrix."""
    R, pivots = _rref_values(M.field, M.values, M.cols)
    return _kernel_from_rref(M.field, R, pivots, M.cols)


def solve(M, b):
    """Solve M x = b for one or several right-hand sides.

    Returns ``None`` when some column of b lies outside the column span of M.
    """
    M._check_field(b)
    if M.rows != b.rows:
        raise DimensionMismatch(f'Right-hand side with {b.rows} rows for a system with {M.rows} rows')
    field = M.field
    n = M.cols
    augmented = np.hstack([M.values, b.values])
    R, pivots = _rref_values(field, augmented, n)
    r = len(pivots)
    if np.any(R[r:, n:]):
        return None
    particular = field.zeros((n, b.cols))
    if r:
        particular[pivots, :] = R[:r, n:]
    return Solution(Matrix(field, particular), _kernel_from_rref(field, R[:, :n], pivots, n))


def inverse(M):
    if M.rows != M.cols:
        raise DimensionMismatch(f'Only square matrices are invertible, got {M.shape}')
    solution = solve(M, Matrix.identity(M.field, M.rows))
    if solution is None or solution.kernel.cols > 0:
        raise SingularMatrix(f'Matrix of shape {M.shape} is singular')
    return solution.particular


def column_space(M):
    """The pivot columns of M: a basis of its image chosen among its own columns."""
    _, pivots = _rref_values(M.field, M.values, M.cols)
    return Matrix(M.field, M.values[:, pivots])


def quotient_map(U):
    """Quotient of k^d by the column span of U (a d x u matrix)."""
    field = U.field
    d = U.rows
    identity = Matrix.identity(field, d)
    _, pivots = _rref_values(field, np.hstack([U.values, identity.values]), U.cols + d)
    subspace = U.values[:, [c for c in pivots if c < U.cols]]
    section = identity.values[:, [c - U.cols for c in pivots if c >= U.cols]]
    combined = inverse(Matrix(field, np.hstack([subspace, section])))
    r = subspace.shape[1]
    return Quotient(Matrix(field, subspace), combined[r:, :], Matrix(field, section))


def kron(A, B):
    A._check_field(B)
    if 0 in A.shape or 0 in B.shape:
        return Matrix.zeros(A.field, A.rows * B.rows, A.cols * B.cols)
    return Matrix(A.field, np.kron(A.values, B.values))
