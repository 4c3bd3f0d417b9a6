"""Finite-dimensional associative unital algebras given by structure constants."""
import logging
from functools import cached_property

import numpy as np

from src.exactla import Matrix, column_space, hstack, rank
from src.exceptions import DimensionMismatch, MissingIdempotents
from src.utils.checks import Violation

logger = logging.getLogger(__name__)


class Algebra:
    """An algebra with basis b_0..b_{n-1} and b_i b_j = sum_k structure[i, j, k] b_k.

    Elements are n x 1 column matrices of coefficients. Left multiplication by
    b_i is the matrix ``structure[i].T`` and right multiplication by b_j is
    ``structure[:, j, :].T``.
    """

    def __init__(self, field, structure, unit, labels=None, idempotents=(), complete=False, name=None):
        structure = np.asarray(structure)
        n = structure.shape[0]
        if n == 0 or structure.shape != (n, n, n):
            raise DimensionMismatch(f'Structure constants need shape (n, n, n) with n > 0, got {structure.shape}')
        self.field = field
        self.dim = n
        self.name = name
        self.structure = field.array(structure.tolist())
        self.structure.setflags(write=False)
        self.unit = unit
        self.labels = list(labels) if labels is not None else [f'b{i}' for i in range(n)]
        if len(self.labels) != n:
            raise DimensionMismatch(f'{len(self.labels)} labels for an algebra of dimension {n}')
        self.idempotents = tuple(idempotents)
        self.complete = complete
        for vector in (unit,) + self.idempotents:
            if vector.shape != (n, 1):
                raise DimensionMismatch(f'Algebra elements need shape ({n}, 1), got {vector.shape}')

    def __repr__(self):
        return f'Algebra({self.name or "unnamed"}, dim={self.dim}, over {self.field})'

    @classmethod
    def from_table(cls, field, dim, entries, unit, **kwargs):
        """Build from sparse (i, j, k, scalar) entries of the multiplication table."""
        structure = field.zeros((dim, dim, dim))
        for i, j, k, value in entries:
            structure[i, j, k] = field.element(structure[i, j, k] + field.element(value))
        return cls(field, structure, unit, **kwargs)

    def basis_vector(self, i):
        values = self.field.zeros((self.dim, 1))
        values[i, 0] = self.field.element(1)
        return Matrix(self.field, values)

    def element(self, coefficients):
        return Matrix.column(self.field, coefficients)

    def zero(self):
        return Matrix.zeros(self.field, self.dim, 1)

    @cached_property
    def left_matrices(self):
        return [Matrix(self.field, self.structure[i].T) for i in range(self.dim)]

    @cached_property
    def right_matrices(self):
        return [Matrix(self.field, self.structure[:, j, :].T) for j in range(self.dim)]

    def left_matrix(self, a):
        values = np.tensordot(a.values[:, 0], self.structure, axes=(0, 0))
        return Matrix(self.field, values.T)

    def right_matrix(self, a):
        values = np.tensordot(self.structure, a.values[:, 0], axes=(1, 0))
        return Matrix(self.field, values.T)

    def multiply(self, a, b):
        return self.left_matrix(a) @ b

    def multiplication_matrix(self):
        """The n x n^2 matrix of a (x) b -> ab, columns indexed by i * n + j."""
        return Matrix(self.field, self.structure.reshape(self.dim * self.dim, self.dim).T)

    def commutator(self, a, b):
        return self.multiply(a, b) - self.multiply(b, a)

    def format_element(self, a):
        terms = []
        for coefficient, label in zip(a.values[:, 0].tolist(), self.labels):
            if coefficient == 0:
                continue
            text = self.field.format(coefficient)
            terms.append(label if text == '1' else f'{text}*{label}')
        return ' + '.join(terms) if terms else '0'


def validate_algebra(A):
    """Every violated associativity, unit and idempotent constraint of A.

    Returns
    -------
    list of Violation
        empty iff A is a unital associative algebra whose listed idempotents
        are idempotent, pairwise orthogonal and (if declared complete) sum to 1
    """
    violations = []
    field = A.field
    for i in range(A.dim):
        for j in range(A.dim):
            product = Matrix(field, A.structure[i, j, :].reshape(-1, 1))
            lhs = A.left_matrix(product)
            rhs = A.left_matrices[i] @ A.left_matrices[j]
            for k in np.flatnonzero(np.any(lhs.values != rhs.values, axis=0)):
                violations.append(Violation('associativity', f'({A.labels[i]},{A.labels[j]},{A.labels[k]})',
                                            '(b_i b_j) b_k != b_i (b_j b_k)'))
    identity = Matrix.identity(field, A.dim)
    left_unit = A.left_matrix(A.unit)
    right_unit = A.right_matrix(A.unit)
    for i in range(A.dim):
        if left_unit[:, i:i + 1] != identity[:, i:i + 1]:
            violations.append(Violation('unit', A.labels[i], '1 * b_i != b_i'))
        if right_unit[:, i:i + 1] != identity[:, i:i + 1]:
            violations.append(Violation('unit', A.labels[i], 'b_i * 1 != b_i'))
    for r, e in enumerate(A.idempotents):
        if A.multiply(e, e) != e:
            violations.append(Violation('idempotent', f'e{r}', 'e * e != e'))
        for s, f in enumerate(A.idempotents):
            if r != s and not A.multiply(e, f).is_zero():
                violations.append(Violation('orthogonality', f'(e{r},e{s})', 'e_r * e_s != 0'))
    if A.complete:
        total = A.zero()
        for e in A.idempotents:
            total = total + e
        if total != A.unit:
            violations.append(Violation('completeness', 'idempotents', 'sum of idempotents != 1'))
    return violations


class DualBimodule:
    """The A-bimodule A* in the dual basis, with (a.phi.b)(c) = phi(b c a)."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.left_action = [R.T for R in algebra.right_matrices]
        self.right_action = [L.T for L in algebra.left_matrices]

    def left(self, a):
        return self.algebra.right_matrix(a).T

    def right(self, a):
        return self.algebra.left_matrix(a).T

    def corner_dimension(self, e, f):
        """dim e.A*.f"""
        return rank(self.left(e) @ self.right(f))


def dual_bimodule(A):
    return DualBimodule(A)


def commutator_subspace(A):
    """A basis (as columns) of [A, A] = span{ab - ba}."""
    blocks = [L - R for L, R in zip(A.left_matrices, A.right_matrices)]
    return column_space(hstack(blocks))


def corner_dimension(A, e, f):
    """dim e A f"""
    return rank(A.left_matrix(e) @ A.right_matrix(f))


def cartan_matrix(A):
    """Entry (i, j) is dim e_i A e_j = dim Hom_A(Ae_i, Ae_j).

    Both numbers are computed, the second by solving hom spaces, and a
    disagreement is treated as an internal error.
    """
    if not A.idempotents or not A.complete:
        raise MissingIdempotents(f'{A} needs a complete list of orthogonal idempotents')
    from src.rep import hom_space, projective

    r = len(A.idempotents)
    cartan = np.zeros((r, r), dtype=int)
    projectives = [projective(A, e) for e in A.idempotents]
    for i, e in enumerate(A.idempotents):
        for j, f in enumerate(A.idempotents):
            cartan[i, j] = corner_dimension(A, e, f)
            solved = len(hom_space(projectives[i], projectives[j]))
            if solved != cartan[i, j]:
                raise RuntimeError(f'dim e_{i}Ae_{j} = {cartan[i, j]} but dim Hom(P_{i}, P_{j}) = {solved}')
    return cartan
