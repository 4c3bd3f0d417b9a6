import pytest

from src.algebra import Algebra, cartan_matrix, commutator_subspace, corner_dimension, dual_bimodule, validate_algebra
from src.catalog import CATALOG_NAMES
from src.exactla import Field, Matrix, hstack, kernel
from src.exceptions import MissingIdempotents

Q = Field(0)


@pytest.mark.parametrize('name', CATALOG_NAMES)
def test_catalog_algebras_are_valid(catalog, name):
    assert validate_algebra(catalog(name).algebra) == []


def test_planted_associativity_defect_is_located():
    # E12 E22 = E22 instead of E12
    entries = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 2, 1), (2, 2, 2, 1)]
    A = Algebra.from_table(Q, 3, entries, Matrix.column(Q, [1, 0, 1]), labels=['E11', 'E12', 'E22'])
    violations = validate_algebra(A)
    assert any(v.invariant == 'associativity' and v.location == '(E11,E12,E22)' for v in violations)


def test_non_idempotent_is_reported():
    A = Algebra.from_table(Q, 1, [(0, 0, 0, 1)], Matrix.column(Q, [1]), idempotents=[Matrix.column(Q, [2])])
    assert [v.invariant for v in validate_algebra(A)] == ['idempotent']


def test_incomplete_idempotents_are_reported(path_a2):
    A = path_a2.algebra
    partial = Algebra(A.field, A.structure, A.unit, labels=A.labels, idempotents=A.idempotents[:1], complete=True)
    assert [v.invariant for v in validate_algebra(partial)] == ['completeness']


def test_dual_bimodule_of_ground_field(triv):
    D = dual_bimodule(triv.algebra)
    one = triv.algebra.unit
    assert D.left(one) == Matrix.identity(Q, 1)
    assert D.right(one) == Matrix.identity(Q, 1)


def test_dual_bimodule_group_generator_swaps_coordinates(grp_f2c2):
    A = grp_f2c2.algebra
    g = A.basis_vector(1)
    assert dual_bimodule(A).left(g) == Matrix.from_rows(A.field, [[0, 1], [1, 0]])


def test_dual_bimodule_actions_commute(path_a2):
    A = path_a2.algebra
    D = dual_bimodule(A)
    for i in range(A.dim):
        for j in range(A.dim):
            a, b = A.basis_vector(i), A.basis_vector(j)
            assert D.left(a) @ D.right(b) == D.right(b) @ D.left(a)


def test_dual_bimodule_corner(path_a2):
    e1 = path_a2.algebra.idempotents[0]
    assert dual_bimodule(path_a2.algebra).corner_dimension(e1, e1) == 1


def test_commutators_of_commutative_algebra(grp_f2c2, prod2):
    assert commutator_subspace(grp_f2c2.algebra).cols == 0
    assert commutator_subspace(prod2.algebra).cols == 0


def test_commutators_of_path_algebra(path_a2):
    assert commutator_subspace(path_a2.algebra) == Matrix.column(Q, [0, 1, 0])


def test_commutators_of_s3(grp_f3s3):
    # three conjugacy classes
    assert commutator_subspace(grp_f3s3.algebra).cols == 3


@pytest.mark.parametrize('name', ['Triv', 'GrpF2C2', 'GrpF3C3', 'GrpF3S3', 'GrpQC2', 'Prod2'])
def test_frobenius_form_vanishes_on_commutators(catalog, name):
    ws = catalog(name)
    assert ws.frob_structure is not None
    assert (ws.frobenius_form @ commutator_subspace(ws.algebra)).is_zero()


@pytest.mark.parametrize('name', CATALOG_NAMES)
def test_symmetric_functionals_vanish_on_commutators(catalog, name):
    A = catalog(name).algebra
    # lambda(ab) = lambda(ba) for all basis elements: lambda (L_i - R_i) = 0
    symmetric = kernel(hstack([L - R for L, R in zip(A.left_matrices, A.right_matrices)]).T)
    commutators = commutator_subspace(A)
    assert symmetric.cols == A.dim - commutators.cols
    assert (symmetric.T @ commutators).is_zero()


def test_symmetric_functionals_of_path_algebra(path_a2):
    A = path_a2.algebra
    symmetric = kernel(hstack([L - R for L, R in zip(A.left_matrices, A.right_matrices)]).T)
    assert symmetric.cols == 2
    # no symmetric functional sees the arrow E12
    assert (symmetric.T @ Matrix.column(Q, [0, 1, 0])).is_zero()


def test_corner_dimension(path_a2):
    e1, e2 = path_a2.algebra.idempotents
    assert corner_dimension(path_a2.algebra, e1, e2) == 1
    assert corner_dimension(path_a2.algebra, e2, e1) == 0


def test_cartan_matrices(path_a2, grp_f3s3, grp_qc2, prod2):
    assert cartan_matrix(path_a2.algebra).tolist() == [[1, 1], [0, 1]]
    assert cartan_matrix(grp_f3s3.algebra).tolist() == [[2, 1], [1, 2]]
    assert cartan_matrix(grp_qc2.algebra).tolist() == [[1, 0], [0, 1]]
    assert cartan_matrix(prod2.algebra).tolist() == [[2, 0], [0, 2]]


def test_cartan_needs_idempotents(path_a2):
    A = path_a2.algebra
    bare = Algebra(A.field, A.structure, A.unit, labels=A.labels)
    with pytest.raises(MissingIdempotents):
        cartan_matrix(bare)


def test_multiplication_helpers(grp_f3c3):
    A = grp_f3c3.algebra
    g = A.basis_vector(1)
    assert A.multiply(g, A.multiply(g, g)) == A.unit
    assert A.commutator(g, A.basis_vector(2)).is_zero()
    assert A.multiplication_matrix().shape == (3, 9)
