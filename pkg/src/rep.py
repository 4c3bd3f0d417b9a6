"""Finite-dimensional left modules, intertwiners and projective presentations."""
import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.exactla import Matrix, block_diagonal, column_space, hstack, kernel, kron, rank, solve, vstack
from src.exceptions import (AlgebraMismatch, CompositionMismatch, DimensionMismatch, NotIdempotent, NotIntertwiner,
                            NotProjective, NotSubmodule, ShapeMismatch)
from src.utils.checks import Violation
from src.utils.memo import memoized_on

logger = logging.getLogger(__name__)


class AModule:
    """A left module given by one action matrix per basis element of the algebra.

    Two modules are equal only if they are the same object; use
    ``same_presentation`` to compare action matrices and ``find_isomorphism``
    to compare up to isomorphism.
    """

    def __init__(self, algebra, action, name=None):
        action = tuple(action)
        if len(action) != algebra.dim:
            raise DimensionMismatch(f'{len(action)} action matrices for an algebra of dimension {algebra.dim}')
        dim = action[0].rows
        for matrix in action:
            if matrix.shape != (dim, dim):
                raise DimensionMismatch(f'Action matrices must all be {dim}x{dim}, got {matrix.shape}')
        self.algebra = algebra
        self.action = action
        self.dim = dim
        self.name = name

    def __repr__(self):
        return f'{type(self).__name__}({self.name or "unnamed"}, dim={self.dim})'

    @property
    def field(self):
        return self.algebra.field

    @cached_property
    def _stacked_action(self):
        return np.stack([matrix.values for matrix in self.action])

    def act(self, a):
        """The action matrix of an algebra element a."""
        if self.dim == 0:
            return Matrix.zeros(self.field, 0, 0)
        return Matrix(self.field, np.tensordot(a.values[:, 0], self._stacked_action, axes=(0, 0)))

    def same_presentation(self, other):
        return self.algebra is other.algebra and self.action == other.action


def validate_module(M):
    """Violations of the unit and multiplicativity laws of the action."""
    A = M.algebra
    violations = []
    if M.act(A.unit) != Matrix.identity(M.field, M.dim):
        violations.append(Violation('module unit', M.name or 'module', 'rho(1) != identity'))
    for i in range(A.dim):
        for j in range(A.dim):
            product = Matrix(A.field, A.structure[i, j, :].reshape(-1, 1))
            if M.action[i] @ M.action[j] != M.act(product):
                violations.append(Violation('module action', f'({A.labels[i]},{A.labels[j]})',
                                            'rho(b_i) rho(b_j) != rho(b_i b_j)'))
    return violations


class ModuleMap:
    """An intertwiner source -> target stored as a target.dim x source.dim matrix."""

    def __init__(self, source, target, matrix, check=True):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch('Module maps need source and target over the same algebra')
        if matrix.shape != (target.dim, source.dim):
            raise ShapeMismatch(f'Map {source} -> {target} needs shape {(target.dim, source.dim)}, got {matrix.shape}')
        if check:
            for i, (rho_s, rho_t) in enumerate(zip(source.action, target.action)):
                if matrix @ rho_s != rho_t @ matrix:
                    raise NotIntertwiner(f'Map {source} -> {target} does not commute with {source.algebra.labels[i]}')
        self.source = source
        self.target = target
        self.matrix = matrix

    def __repr__(self):
        return f'ModuleMap({self.source} -> {self.target}, {self.matrix.format()})'

    @classmethod
    def identity(cls, module):
        return cls(module, module, Matrix.identity(module.field, module.dim), check=False)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, Matrix.zeros(source.field, target.dim, source.dim), check=False)

    def _check_parallel(self, other):
        if other.source is not self.source or other.target is not self.target:
            raise ShapeMismatch('Only maps with the same source and target can be added')

    def __add__(self, other):
        self._check_parallel(other)
        return ModuleMap(self.source, self.target, self.matrix + other.matrix, check=False)

    def __sub__(self, other):
        self._check_parallel(other)
        return ModuleMap(self.source, self.target, self.matrix - other.matrix, check=False)

    def scale(self, factor):
        return ModuleMap(self.source, self.target, self.matrix.scale(factor), check=False)

    def __eq__(self, other):
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return self.source is other.source and self.target is other.target and self.matrix == other.matrix

    __hash__ = None

    def is_zero(self):
        return self.matrix.is_zero()

    def is_isomorphism(self):
        return self.source.dim == self.target.dim and rank(self.matrix) == self.source.dim


def compose(g, f):
    """g after f."""
    if f.target is not g.source:
        raise CompositionMismatch(f'Cannot compose {g.source} <- {g.target} after {f.source} -> {f.target}')
    return ModuleMap(f.source, g.target, g.matrix @ f.matrix, check=False)


def linear_combination(source, target, maps, coefficients):
    total = ModuleMap.zero(source, target)
    for h, c in zip(maps, coefficients):
        total = total + h.scale(c)
    return total


@memoized_on(lambda M, N: M.algebra)
def hom_space(M, N):
    """Basis of Hom_A(M, N), solved from X rho_M(b_i) = rho_N(b_i) X.

    With row-major vectorisation the equation reads
    (I_N (x) rho_M(b_i)^T - rho_N(b_i) (x) I_M) vec(X) = 0.
    """
    if M.algebra is not N.algebra:
        raise AlgebraMismatch(f'Hom({M}, {N}) over different algebras')
    if M.dim == 0 or N.dim == 0:
        return ()
    field = M.field
    I_M = Matrix.identity(field, M.dim)
    I_N = Matrix.identity(field, N.dim)
    system = vstack([kron(I_N, rho_m.T) - kron(rho_n, I_M) for rho_m, rho_n in zip(M.action, N.action)])
    K = kernel(system)
    return tuple(ModuleMap(M, N, K[:, s:s + 1].reshape(N.dim, M.dim), check=False) for s in range(K.cols))


def random_map(source, target, basis, rng):
    """Random combination of the given basis of a hom space."""
    coefficients = source.field.random_array(rng, (len(basis),)).tolist()
    return linear_combination(source, target, basis, coefficients)


def find_isomorphism(M, N, rng=None, attempts=20):
    """An invertible intertwiner M -> N, or None if none was found.

    Basis elements are tried first, then seeded random combinations. Over the
    shipped fields a random combination of an isomorphism-containing hom space
    is invertible with high probability, so None means "not isomorphic" in
    practice, not as a proof.
    """
    if M.dim != N.dim:
        return None
    if M.dim == 0:
        return ModuleMap.zero(M, N)
    basis = hom_space(M, N)
    for h in basis:
        if h.is_isomorphism():
            return h
    if rng is None:
        rng = np.random.default_rng(0)
    for _ in range(attempts if basis else 0):
        h = random_map(M, N, basis, rng)
        if h.is_isomorphism():
            return h
    return None


class PrincipalProjective(AModule):
    """The projective Ae with basis a reduction of {b_i e} and its idempotent presentation."""

    def __init__(self, algebra, idempotent, inclusion, action, generator, name=None):
        super(PrincipalProjective, self).__init__(algebra, action, name=name)
        self.idempotent = idempotent
        self.inclusion_matrix = inclusion
        self.generator = generator

    @property
    def inclusion(self):
        """Ae -> A"""
        return ModuleMap(self, regular_module(self.algebra), self.inclusion_matrix, check=False)

    @property
    def projection(self):
        """A -> Ae, a -> ae"""
        A = self.algebra
        matrix = hstack([self.action[k] @ self.generator for k in range(A.dim)])
        return ModuleMap(regular_module(A), self, matrix, check=False)


def projective(A, e, name=None):
    """The left ideal Ae as a module, together with its inclusion into A."""
    if A.multiply(e, e) != e:
        raise NotIdempotent(f'{A.format_element(e)} is not idempotent')
    field = A.field
    B = column_space(A.right_matrix(e))
    r = B.cols
    if r == 0:
        return PrincipalProjective(A, e, B, [Matrix.zeros(field, 0, 0)] * A.dim, Matrix.zeros(field, 0, 1), name=name)
    images = solve(B, hstack([L @ B for L in A.left_matrices]))
    action = [images.particular[:, i * r:(i + 1) * r] for i in range(A.dim)]
    generator = solve(B, e).particular
    return PrincipalProjective(A, e, B, action, generator, name=name)


@memoized_on(lambda A: A)
def regular_module(A):
    return projective(A, A.unit, name='A')


class DirectSum(AModule):
    def __init__(self, summands, name=None):
        summands = tuple(summands)
        algebra = summands[0].algebra
        if any(S.algebra is not algebra for S in summands):
            raise AlgebraMismatch('Direct sum of modules over different algebras')
        action = [block_diagonal(algebra.field, [S.action[i] for S in summands]) for i in range(algebra.dim)]
        super(DirectSum, self).__init__(algebra, action, name=name)
        self.summands = summands
        self.offsets = np.cumsum([0] + [S.dim for S in summands]).tolist()

    def inclusion(self, i):
        matrix = Matrix.zeros(self.field, self.dim, self.summands[i].dim).values.copy()
        start = self.offsets[i]
        matrix[start:start + self.summands[i].dim, :] = Matrix.identity(self.field, self.summands[i].dim).values
        return ModuleMap(self.summands[i], self, Matrix(self.field, matrix), check=False)

    def projection(self, i):
        return ModuleMap(self, self.summands[i], self.inclusion(i).matrix.T, check=False)


def direct_sum(*modules, name=None):
    return DirectSum(modules, name=name)


def free_module(A, m):
    return direct_sum(*([regular_module(A)] * m), name=f'A^{m}')


class Submodule(AModule):
    def __init__(self, ambient, basis, action, name=None):
        super(Submodule, self).__init__(ambient.algebra, action, name=name)
        self.ambient = ambient
        self.basis = basis

    @property
    def inclusion(self):
        return ModuleMap(self, self.ambient, self.basis, check=False)


def submodule(M, vectors, name=None):
    """The submodule spanned by the columns of ``vectors``, which must be stable under the action."""
    basis = column_space(vectors)
    r = basis.cols
    if r == 0:
        return Submodule(M, basis, [Matrix.zeros(M.field, 0, 0)] * M.algebra.dim, name=name)
    images = solve(basis, hstack([rho @ basis for rho in M.action]))
    if images is None:
        raise NotSubmodule(f'The given vectors do not span a submodule of {M}')
    action = [images.particular[:, i * r:(i + 1) * r] for i in range(M.algebra.dim)]
    return Submodule(M, basis, action, name=name)


def injective(A, e, name=None):
    """The module (eA)*: the dual of the right ideal eA."""
    C = column_space(A.left_matrix(e))
    r = C.cols
    if r == 0:
        return AModule(A, [Matrix.zeros(A.field, 0, 0)] * A.dim, name=name)
    images = solve(C, hstack([R @ C for R in A.right_matrices]))
    return AModule(A, [images.particular[:, i * r:(i + 1) * r].T for i in range(A.dim)], name=name)


class ProjectivePresentation:
    """M as a summand of A^n: pi = sum_i pi_i, iota = sum_i iota_i with pi o iota = id_M.

    ``projections[i]`` is A -> M, a -> a.v_i, and ``sections[i]`` is M -> A.
    """

    def __init__(self, module, generators, projections, sections):
        self.module = module
        self.generators = tuple(generators)
        self.projections = tuple(projections)
        self.sections = tuple(sections)

    @property
    def n(self):
        return len(self.generators)

    @cached_property
    def free(self):
        return free_module(self.module.algebra, self.n)

    @property
    def surjection(self):
        return ModuleMap(self.free, self.module, hstack([pi.matrix for pi in self.projections]), check=False)

    @property
    def section(self):
        return ModuleMap(self.module, self.free, vstack([iota.matrix for iota in self.sections]), check=False)

    def entry(self, f, i, j):
        """Entry (i, j) of iota o f o pi as an element of A, i.e. iota_i(f(v_j))."""
        return self.sections[i].matrix @ f.matrix @ self.generators[j]

    def diagonal_sum(self, f):
        """sum_i iota_i(f(v_i)): the diagonal of iota o f o pi read as a matrix over A."""
        if f.source is not self.module or f.target is not self.module:
            raise ShapeMismatch(f'Expected an endomorphism of {self.module}')
        total = self.module.algebra.zero()
        for i in range(self.n):
            total = total + self.entry(f, i, i)
        return total


def split_projective(M, generators=None):
    """Present M as a direct summand of a free module.

    Without explicit generators an Ae module uses its idempotent presentation
    (n = 1), any other module one free generator per basis vector (n = dim M).
    The sections are found inside Hom(M, A): with a basis h_s of it we solve
    sum_{i,s} c_is pi_i h_s = id_M, which has a solution iff M is projective.
    """
    A = M.algebra
    field = M.field
    if M.dim == 0:
        return ProjectivePresentation(M, (), (), ())
    if generators is None and isinstance(M, PrincipalProjective):
        return ProjectivePresentation(M, (M.generator,), (M.projection,), (M.inclusion,))
    if generators is None:
        identity = Matrix.identity(field, M.dim)
        generators = [identity[:, i:i + 1] for i in range(M.dim)]
    regular = regular_module(A)
    projections = [ModuleMap(regular, M, hstack([M.action[k] @ v for k in range(A.dim)]), check=False)
                   for v in generators]
    homs = hom_space(M, regular)
    if not homs:
        raise NotProjective(f'{M} has no nonzero map to A')
    system = hstack([(pi.matrix @ h.matrix).vec() for pi in projections for h in homs])
    solution = solve(system, Matrix.identity(field, M.dim).vec())
    if solution is None:
        raise NotProjective(f'{M} is not a direct summand of A^{len(generators)}')
    coefficients = solution.particular.values[:, 0].reshape(len(generators), len(homs))
    sections = [linear_combination(M, regular, homs, row.tolist()) for row in coefficients]
    return ProjectivePresentation(M, generators, projections, sections)
