"""Module categories of finite-dimensional Hopf algebras.

Tensor products, duals, pivotal structures, the distinguished invertible
object, symmetric Frobenius structures, the modified trace on projectives and
the right partial trace.
"""
import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.exactla import Matrix, inverse, kernel, kron, rank, solve, vstack
from src.exceptions import (AntipodeNotInvertible, Degenerate, HopfMismatch, IntegralNotFound, NotIntertwiner,
                            NotPivotal, NotSymmetric, NotUnimodular, ShapeMismatch, SingularMatrix)
from src.nakayama import nakayama_object, twisted_trace
from src.rep import AModule, ModuleMap, PrincipalProjective, compose, find_isomorphism, hom_space, random_map, \
    split_projective
from src.utils.checks import Violation, check, info
from src.utils.memo import memoized_on
from src.utils.seeding import derive_rng

logger = logging.getLogger(__name__)


class HopfData:
    """Coproduct, counit and antipode of an algebra, all on the basis.

    ``coproduct`` is the n^2 x n matrix with coproduct[j * n + k, i] the
    coefficient of b_j (x) b_k in Delta(b_i); ``counit`` is 1 x n and
    ``antipode`` n x n with S(b_i) = sum_k antipode[k, i] b_k.
    """

    def __init__(self, algebra, coproduct, counit, antipode):
        self.algebra = algebra
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode

    def __repr__(self):
        return f'HopfData({self.algebra})'

    @classmethod
    def from_table(cls, algebra, entries, counit, antipode_rows):
        """Build from sparse (i, j, k, scalar) entries: Delta(b_i) contains scalar * b_j (x) b_k."""
        field = algebra.field
        n = algebra.dim
        values = field.zeros((n * n, n))
        for i, j, k, value in entries:
            values[j * n + k, i] = field.element(values[j * n + k, i] + field.element(value))
        return cls(algebra, Matrix(field, values), Matrix.row(field, counit),
                   Matrix.from_rows(field, antipode_rows))

    @property
    def field(self):
        return self.algebra.field

    def coproduct_of(self, a):
        """Delta(a) as an n x n matrix C with Delta(a) = sum C[j, k] b_j (x) b_k."""
        n = self.algebra.dim
        return (self.coproduct @ a).reshape(n, n)

    def counit_of(self, a):
        return (self.counit @ a).entry(0, 0)

    def antipode_of(self, a):
        return self.antipode @ a

    @cached_property
    def antipode_inverse(self):
        try:
            return inverse(self.antipode)
        except SingularMatrix as error:
            raise AntipodeNotInvertible(f'Antipode of {self.algebra} is singular') from error


def _coproduct_action(H, M, N, a):
    """Action of a on M (x) N through Delta(a)."""
    C = H.coproduct_of(a)
    total = Matrix.zeros(H.field, M.dim * N.dim, M.dim * N.dim)
    for j in np.flatnonzero(np.any(C.values != 0, axis=1)):
        total = total + kron(M.action[j], N.act(C[j:j + 1, :].T))
    return total


def validate_hopf(H):
    """Every violated bialgebra or antipode axiom, by basis element."""
    A = H.algebra
    field = A.field
    n = A.dim
    if H.coproduct.shape != (n * n, n) or H.counit.shape != (1, n) or H.antipode.shape != (n, n):
        return [Violation('shape', 'hopf', 'coproduct must be n^2 x n, counit 1 x n, antipode n x n')]
    violations = []
    I_n = Matrix.identity(field, n)
    D, eps, S = H.coproduct, H.counit, H.antipode
    m = A.multiplication_matrix()
    unit_counit = A.unit @ eps
    laws = [
        ('coassociativity', kron(D, I_n) @ D, kron(I_n, D) @ D),
        ('left counit', kron(eps, I_n) @ D, I_n),
        ('right counit', kron(I_n, eps) @ D, I_n),
        ('antipode', m @ kron(S, I_n) @ D, unit_counit),
        ('antipode', m @ kron(I_n, S) @ D, unit_counit),
    ]
    for law, lhs, rhs in laws:
        for i in np.flatnonzero(np.any(lhs.values != rhs.values, axis=0)):
            violations.append(Violation(law, A.labels[i]))
    if D @ A.unit != kron(A.unit, A.unit):
        violations.append(Violation('coproduct unit', '1', 'Delta(1) != 1 (x) 1'))
    if H.counit_of(A.unit) != 1:
        violations.append(Violation('counit unit', '1', 'epsilon(1) != 1'))
    regular = AModule(A, A.left_matrices)
    for i in range(n):
        delta_i = _coproduct_action(H, regular, regular, A.basis_vector(i))
        for j in range(n):
            product = Matrix(field, A.structure[i, j, :].reshape(-1, 1))
            if D @ product != delta_i @ D[:, j:j + 1]:
                violations.append(Violation('coproduct multiplicative', f'({A.labels[i]},{A.labels[j]})'))
            if H.counit_of(product) != H.counit.entry(0, i) * H.counit.entry(0, j):
                violations.append(Violation('counit multiplicative', f'({A.labels[i]},{A.labels[j]})'))
    return violations


@memoized_on(lambda H: H)
def trivial_module(H):
    """The unit object k with a acting by epsilon(a)."""
    return AModule(H.algebra, [H.counit[:, i:i + 1] for i in range(H.algebra.dim)], name='k')


def character_module(H, character, name=None):
    """The one-dimensional module of an algebra map A -> k given as a 1 x n row."""
    return AModule(H.algebra, [character[:, i:i + 1] for i in range(H.algebra.dim)], name=name)


def _check_hopf(H, *modules):
    for module in modules:
        if module.algebra is not H.algebra:
            raise HopfMismatch(f'{module} is not a module over {H}')


@memoized_on(lambda H, M, N: H)
def tensor_module(H, M, N):
    """M (x) N with a.(m (x) n) = a_(1) m (x) a_(2) n; basis index m * dim N + n."""
    _check_hopf(H, M, N)
    A = H.algebra
    action = [_coproduct_action(H, M, N, A.basis_vector(i)) for i in range(A.dim)]
    return AModule(A, action, name=f'{M.name}(x){N.name}')


@dataclass(frozen=True, eq=False)
class DualModule:
    """A dual object with its evaluation and coevaluation.

    Left dual X^v: ev: X^v (x) X -> k, coev: k -> X (x) X^v.
    Right dual vX: ev: X (x) vX -> k, coev: k -> vX (x) X.
    """
    side: str
    source: AModule
    module: AModule
    evaluation: ModuleMap
    coevaluation: ModuleMap

    def zigzags_hold(self):
        field = self.source.field
        I = Matrix.identity(field, self.source.dim)
        ev, coev = self.evaluation.matrix, self.coevaluation.matrix
        if self.side == 'left':
            return (kron(I, ev) @ kron(coev, I) == I) and (kron(ev, I) @ kron(I, coev) == I)
        return (kron(ev, I) @ kron(I, coev) == I) and (kron(I, ev) @ kron(coev, I) == I)


def dual_module(H, M, side='left'):
    """Left dual through S, right dual through S^-1; (co)evaluations are the canonical pairings."""
    return _dual_module(H, M, side)


@memoized_on(lambda H, M, side: H)
def _dual_module(H, M, side):
    _check_hopf(H, M)
    A = H.algebra
    if side == 'left':
        twist = H.antipode
    elif side == 'right':
        twist = H.antipode_inverse
    else:
        raise ValueError(f'Unknown side {side}, expected left or right')
    action = [M.act(twist[:, i:i + 1]).T for i in range(A.dim)]
    suffix = '^v' if side == 'left' else '^rv'
    dual = AModule(A, action, name=f'{M.name}{suffix}')
    pairing = Matrix.identity(M.field, M.dim).vec()
    unit = trivial_module(H)
    if side == 'left':
        evaluation = ModuleMap(tensor_module(H, dual, M), unit, pairing.T)
        coevaluation = ModuleMap(unit, tensor_module(H, M, dual), pairing)
    else:
        evaluation = ModuleMap(tensor_module(H, M, dual), unit, pairing.T)
        coevaluation = ModuleMap(unit, tensor_module(H, dual, M), pairing)
    return DualModule(side, M, dual, evaluation, coevaluation)


def double_dual(H, M):
    return dual_module(H, dual_module(H, M).module).module


@dataclass(frozen=True, eq=False)
class PivotalStructure:
    hopf: HopfData
    pivot: Matrix
    pivot_inverse: Matrix

    def omega(self, X):
        """The pivotal isomorphism X^vv -> X, acting by the pivot."""
        return ModuleMap(double_dual(self.hopf, X), X, X.act(self.pivot))

    def quantum_dimension(self, X):
        return X.act(self.pivot).trace()


def pivotal_structure(H, g):
    """Check that g is an invertible grouplike with S^2(x) = g x g^-1."""
    A = H.algebra
    if H.counit_of(g) != 1 or H.coproduct @ g != kron(g, g):
        raise NotPivotal(f'{A.format_element(g)} is not grouplike')
    solution = solve(A.left_matrix(g), A.unit)
    if solution is None:
        raise NotPivotal(f'{A.format_element(g)} is not invertible')
    g_inverse = solution.particular
    if H.antipode @ H.antipode != A.left_matrix(g) @ A.right_matrix(g_inverse):
        raise NotPivotal(f'S^2 is not conjugation by {A.format_element(g)}')
    return PivotalStructure(H, g, g_inverse)


def verify_pivot_monoidal(pivotal, X, Y):
    """omega_{X (x) Y} = omega_X (x) omega_Y as explicit matrices, and omega_{X (x) Y} intertwines."""
    H = pivotal.hopf
    XY = tensor_module(H, X, Y)
    combined = kron(X.act(pivotal.pivot), Y.act(pivotal.pivot))
    return pivotal.omega(XY).matrix == combined


@dataclass(frozen=True, eq=False)
class DistinguishedObject:
    """D with N(k) = D^-1.

    For a left integral L, L.a = alpha(a) L defines the modular character
    alpha, and N(k) = A* (x)_A k is dual to the line of left integrals, on
    which A acts through alpha. Hence D^-1 = k_alpha and D = k_(alpha o S).
    """
    modular_character: Matrix
    integral: Matrix
    module: AModule
    inverse_module: AModule

    def is_trivial(self, H):
        return self.modular_character == H.counit


@memoized_on(lambda H: H)
def distinguished_object(H):
    A = H.algebra
    field = A.field
    I_n = Matrix.identity(field, A.dim)
    integrals = kernel(vstack([L - I_n.scale(H.counit.entry(0, i)) for i, L in enumerate(A.left_matrices)]))
    if integrals.cols != 1:
        raise IntegralNotFound(f'Left integrals of {A} span a space of dimension {integrals.cols}, expected 1')
    integral = integrals
    k0 = int(np.flatnonzero(integral.values[:, 0])[0])
    alpha = []
    for R in A.right_matrices:
        image = R @ integral
        value = image.entry(k0, 0) / integral.entry(k0, 0)
        if image != integral.scale(value):
            raise IntegralNotFound(f'Right multiples of the integral of {A} are not proportional to it')
        alpha.append(value)
    character = Matrix.row(field, alpha)
    return DistinguishedObject(character, integral, character_module(H, character @ H.antipode, name='D'),
                               character_module(H, character, name='D^-1'))


@dataclass(frozen=True, eq=False)
class FrobStructure:
    hopf: HopfData
    pivot: PivotalStructure
    frobenius_form: Matrix

    @property
    def algebra(self):
        return self.hopf.algebra

    def form(self, a):
        return (self.frobenius_form @ a).entry(0, 0)

    @cached_property
    def gram(self):
        """lambda(b_i b_j)"""
        A = self.algebra
        return Matrix(A.field, np.tensordot(A.structure, self.frobenius_form.values[0], axes=(2, 0)))


def symmetric_frobenius(H, g, form):
    """Validate (H, g, lambda) as a symmetric Frobenius structure.

    Checked in order: pivot, unimodularity, symmetry, non-degeneracy.
    """
    pivotal = pivotal_structure(H, g)
    D = distinguished_object(H)
    if not D.is_trivial(H):
        raise NotUnimodular(f'Modular character {D.modular_character.format()} differs from the counit')
    structure = FrobStructure(H, pivotal, form)
    gram = structure.gram
    if gram != gram.T:
        raise NotSymmetric('lambda(ab) != lambda(ba) for some basis pair')
    if rank(gram) < H.algebra.dim:
        raise Degenerate('The form (a, b) -> lambda(ab) is degenerate')
    return structure


def untwisting(F, X):
    """The trivialisation X -> N(X), x -> [lambda (x) x]."""
    NX = nakayama_object(X)
    I_d = Matrix.identity(X.field, X.dim)
    matrix = NX.via_tensor.projection @ kron(F.frobenius_form.T, I_d)
    return ModuleMap(X, NX.module, matrix)


def modified_trace(F, M, f, presentation=None):
    """lambda of the diagonal sum of iota o f o pi over a presentation of M."""
    if presentation is None:
        presentation = split_projective(M)
    return F.form(presentation.diagonal_sum(f))


def right_closure(F, X):
    """X (x) X^v -> k, x (x) phi -> phi(g x)."""
    H = F.hopf
    dual = dual_module(H, X).module
    g_action = X.act(F.pivot.pivot)
    return ModuleMap(tensor_module(H, X, dual), trivial_module(H), g_action.T.vec().T)


def partial_trace(F, P, X, f):
    """(id_P (x) closure) o (f (x) id) o (id_P (x) coev): P -> P."""
    H = F.hopf
    PX = tensor_module(H, P, X)
    if f.source is not PX or f.target is not PX:
        raise ShapeMismatch(f'Partial trace needs an endomorphism of {PX}')
    field = P.field
    I_P = Matrix.identity(field, P.dim)
    I_X = Matrix.identity(field, X.dim)
    closure = X.act(F.pivot.pivot).T.vec().T
    coevaluation = I_X.vec()
    matrix = kron(I_P, closure) @ kron(f.matrix, I_X) @ kron(I_P, coevaluation)
    return ModuleMap(P, P, matrix)


def verify_partial_trace(F, P, X, samples=25, seed=42):
    """t_P(tr(f)) = t_{P (x) X}(f) on random endomorphisms f of P (x) X."""
    H = F.hopf
    section = 'partial_trace'
    subject = f'{P.name},{X.name}'
    PX = tensor_module(H, P, X)
    try:
        right_closure(F, X)
        closes = True
    except NotIntertwiner:
        closes = False
    checks = [check(section, f'{subject}: closure intertwines', closes, f'{X.name}(x){X.name}^v -> k')]
    presentation = split_projective(PX)
    identity = ModuleMap.identity(PX)
    qdim = F.pivot.quantum_dimension(X)
    traced_identity = partial_trace(F, P, X, identity)
    checks.append(check(section, f'{subject}: tr(id)', traced_identity == ModuleMap.identity(P).scale(qdim),
                        f'qdim {qdim}'))
    basis = hom_space(PX, PX)
    rng = derive_rng(seed, 'partial_trace', P.name, X.name)
    failures = 0
    for _ in range(samples):
        f = random_map(PX, PX, basis, rng)
        if modified_trace(F, P, partial_trace(F, P, X, f)) != modified_trace(F, PX, f, presentation):
            failures += 1
    checks.append(check(section, f'{subject}: t_P(tr f) = t_PX(f)', failures == 0, f'{samples - failures}/{samples}'))
    return checks


def _alternate_presentation(M):
    """A second free cover of M: basis generators with one vector repeated."""
    identity = Matrix.identity(M.field, M.dim)
    generators = [identity[:, i:i + 1] for i in reversed(range(M.dim))]
    return split_projective(M, generators + generators[:1])


def verify_modified_trace(F, projectives, samples=25, seed=42):
    """Cyclicity, presentation independence and agreement with the transported twisted trace."""
    section = 'modified_trace'
    checks = []
    for M in projectives:
        rng = derive_rng(seed, 'modified_trace', M.name)
        endomorphisms = hom_space(M, M)
        default = split_projective(M)
        alternate = _alternate_presentation(M)
        independent = all(modified_trace(F, M, f, default) == modified_trace(F, M, f, alternate)
                          for f in endomorphisms)
        checks.append(check(section, f'{M.name}: presentation independence', independent,
                            f'n={default.n} vs n={alternate.n}'))
        if isinstance(M, PrincipalProjective):
            u = untwisting(F, M)
            agree = True
            for _ in range(samples if endomorphisms else 0):
                f = random_map(M, M, endomorphisms, rng)
                agree = agree and modified_trace(F, M, f) == twisted_trace(M, compose(u, f))
            checks.append(check(section, f'{M.name}: agrees with untwisted t_P', agree, f'{samples} maps'))
        checks.append(info(section, f'{M.name}: d^m', modified_trace(F, M, ModuleMap.identity(M))))
    for M in projectives:
        for N in projectives:
            forward = hom_space(M, N)
            backward = hom_space(N, M)
            rng = derive_rng(seed, 'modified_trace_cyclicity', M.name, N.name)
            failures = 0
            pairs = samples if forward and backward else 0
            for _ in range(pairs):
                f = random_map(M, N, forward, rng)
                g = random_map(N, M, backward, rng)
                if modified_trace(F, N, compose(f, g)) != modified_trace(F, M, compose(g, f)):
                    failures += 1
            checks.append(check(section, f'{M.name},{N.name}: cyclicity', failures == 0, f'{pairs - failures}/{pairs}'))
    return checks


def nakayama_twist_check(H, X, rng=None, attempts=100):
    """Whether N(X) is isomorphic to D^-1 (x) X^vv, by an explicit isomorphism search."""
    D = distinguished_object(H)
    twisted = tensor_module(H, D.inverse_module, double_dual(H, X))
    return find_isomorphism(nakayama_object(X).module, twisted, rng, attempts) is not None
