"""Degree-zero trace field theory.

HH_0(A) = A/[A, A], Hattori-Stallings traces of endomorphisms of projectives,
trace-dual bases of hom spaces, handle elements and the block diagonal
star product f * g = sum_i f h_i g h^i.
"""
import logging
from dataclasses import dataclass

from src.algebra import cartan_matrix, commutator_subspace
from src.exactla import Matrix, inverse, quotient_map
from src.exceptions import DegenerateGram, ShapeMismatch, SingularMatrix
from src.rep import ModuleMap, compose, hom_space, linear_combination, random_map, regular_module, split_projective
from src.tensor import modified_trace
from src.utils.checks import check, info
from src.utils.memo import memoized_on
from src.utils.seeding import derive_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HH0Space:
    algebra: object
    commutator_basis: Matrix
    projection: Matrix
    quotient_basis: Matrix

    @property
    def dim(self):
        return self.projection.rows

    def project(self, a):
        return HH0Class(self, self.projection @ a)

    def zero(self):
        return HH0Class(self, Matrix.zeros(self.algebra.field, self.dim, 1))


@dataclass(frozen=True, eq=False)
class HH0Class:
    space: HH0Space
    coords: Matrix

    def __add__(self, other):
        return HH0Class(self.space, self.coords + other.coords)

    def __sub__(self, other):
        return HH0Class(self.space, self.coords - other.coords)

    def scale(self, factor):
        return HH0Class(self.space, self.coords.scale(factor))

    def __eq__(self, other):
        if not isinstance(other, HH0Class):
            return NotImplemented
        return self.space is other.space and self.coords == other.coords

    __hash__ = None

    def is_zero(self):
        return self.coords.is_zero()

    @property
    def representative(self):
        return self.space.quotient_basis @ self.coords

    def trace(self, F):
        """lambda on the class; well defined because lambda vanishes on commutators."""
        return F.form(self.representative)

    def format(self):
        return self.coords.T.format()


@memoized_on(lambda A: A)
def hh0(A):
    commutators = commutator_subspace(A)
    quotient = quotient_map(commutators)
    return HH0Space(A, commutators, quotient.projection, quotient.section)


def hs_trace(f, presentation=None):
    """Class of the diagonal sum of iota o f o pi in A/[A, A]."""
    M = f.source
    if f.target is not M:
        raise ShapeMismatch('The Hattori-Stallings trace needs an endomorphism')
    if presentation is None:
        presentation = split_projective(M)
    return hh0(M.algebra).project(presentation.diagonal_sum(f))


@dataclass(frozen=True, eq=False)
class DualBasisPair:
    """backward h_i of Hom(Q, P) and forward h^i of Hom(P, Q) with t_P(h_i o h^j) = delta_ij.

    ``gram`` is the matrix t_P(h_i o h^j) of the bases before correction.
    """
    P: object
    Q: object
    forward: tuple
    backward: tuple
    gram: Matrix

    def __len__(self):
        return len(self.forward)


def _gram(F, P, forward, backward):
    presentation = split_projective(P)
    field = P.field
    values = field.zeros((len(backward), len(forward)))
    for i, h_low in enumerate(backward):
        for j, h_up in enumerate(forward):
            values[i, j] = modified_trace(F, P, compose(h_low, h_up), presentation).value
    return Matrix(field, values)


def _correct(F, P, Q, forward, backward):
    if len(forward) != len(backward):
        raise DegenerateGram(f'dim Hom({P.name},{Q.name}) = {len(forward)} but dim Hom({Q.name},{P.name}) = {len(backward)}')
    if not forward:
        return DualBasisPair(P, Q, (), (), Matrix.zeros(P.field, 0, 0))
    gram = _gram(F, P, forward, backward)
    try:
        gram_inverse = inverse(gram)
    except SingularMatrix as error:
        raise DegenerateGram(f'Gram matrix of Hom({P.name},{Q.name}) is singular: {gram.format()}') from error
    corrected = tuple(linear_combination(P, Q, forward, gram_inverse[:, j:j + 1].values[:, 0].tolist())
                      for j in range(len(forward)))
    return DualBasisPair(P, Q, corrected, tuple(backward), gram)


@memoized_on(lambda F, P, Q: P.algebra)
def _default_dual_bases(F, P, Q):
    return _correct(F, P, Q, hom_space(P, Q), hom_space(Q, P))


def dual_bases(F, P, Q, forward=None, backward=None):
    """Trace-dual bases of Hom(P, Q) and Hom(Q, P).

    Starting from the given (or solved) bases with Gram matrix G_ij = t_P(h_i o h^j),
    the forward basis is replaced by sum_k (G^-1)_kj h^k.
    """
    if forward is None and backward is None:
        return _default_dual_bases(F, P, Q)
    forward = tuple(hom_space(P, Q) if forward is None else forward)
    backward = tuple(hom_space(Q, P) if backward is None else backward)
    return _correct(F, P, Q, forward, backward)


def handle_element(F, P, Q, pair=None):
    """xi_{P,Q} = sum_i h_i o h^i in End(P)."""
    pair = dual_bases(F, P, Q) if pair is None else pair
    xi = ModuleMap.zero(P, P)
    for h_low, h_up in zip(pair.backward, pair.forward):
        xi = xi + compose(h_low, h_up)
    return xi


def star(F, f, g, pair=None):
    """f * g = sum_i f o h_i o g o h^i for f in End(P) and g in End(Q)."""
    P, Q = f.source, g.source
    if f.target is not P or g.target is not Q:
        raise ShapeMismatch('The star product takes two endomorphisms')
    pair = dual_bases(F, P, Q) if pair is None else pair
    result = ModuleMap.zero(P, P)
    for h_low, h_up in zip(pair.backward, pair.forward):
        result = result + compose(f, compose(h_low, compose(g, h_up)))
    return result


def star_classes(F, f, g):
    """HS(f * g), the class-level product of HS(f) and HS(g)."""
    return hs_trace(star(F, f, g))


def algebra_dual_bases(F):
    """x_i = b_i and x^j = sum_k (G^-1)_kj b_k, so that lambda(x_i x^j) = delta_ij."""
    A = F.algebra
    gram_inverse = inverse(F.gram)
    lower = [A.basis_vector(i) for i in range(A.dim)]
    upper = [gram_inverse[:, j:j + 1] for j in range(A.dim)]
    return lower, upper


def algebra_handle_element(F):
    """sum_i x_i x^i, a central element of A."""
    A = F.algebra
    total = A.zero()
    for lower, upper in zip(*algebra_dual_bases(F)):
        total = total + A.multiply(lower, upper)
    return total


def algebra_star(F, a, b):
    """sum_i a x_i b x^i"""
    A = F.algebra
    total = A.zero()
    for lower, upper in zip(*algebra_dual_bases(F)):
        total = total + A.multiply(A.multiply(a, lower), A.multiply(b, upper))
    return total


def _alternate_basis(basis):
    """h_0, h_1 + h_0, h_2 + h_1, ...: another basis, by a unitriangular change."""
    return tuple(h if i == 0 else h + basis[i - 1] for i, h in enumerate(basis))


def trace_table(F, projectives):
    """Matrix of t_P(xi_{P,Q}) over the given projectives."""
    field = F.algebra.field
    values = field.zeros((len(projectives), len(projectives)))
    for i, P in enumerate(projectives):
        for j, Q in enumerate(projectives):
            values[i, j] = modified_trace(F, P, handle_element(F, P, Q)).value
    return Matrix(field, values)


def verify_trace_field(F, projectives, samples=50, seed=42):
    """All degree-zero consequences of the trace field theory, for each pair of projectives.

    Parameters
    ----------
    F : FrobStructure
        symmetric Frobenius structure of the algebra
    projectives : list of PrincipalProjective
        the indecomposable projectives Ae_i, in idempotent order
    samples : int, default=50
        random pairs per (P, Q) for the HH_0 checks
    seed : int, default=42
        seed of the random pairs

    Returns
    -------
    list
        Check rows
    """
    section = 'trace_field'
    A = F.algebra
    checks = []
    for P in projectives:
        end_p = hom_space(P, P)
        for Q in projectives:
            subject = f'{P.name},{Q.name}'
            end_q = hom_space(Q, Q)
            pair = dual_bases(F, P, Q)
            dim_hom = len(pair)
            xi = handle_element(F, P, Q, pair)

            duality = _gram(F, P, pair.forward, pair.backward) == Matrix.identity(A.field, dim_hom)
            checks.append(check(section, f'{subject}: dual bases', duality, f'dim {dim_hom}'))

            reverse = dual_bases(F, Q, P)
            checks.append(check(section, f'{subject}: gram symmetry', pair.gram == reverse.gram.T, pair.gram.format()))

            central = all(compose(z, xi) == compose(xi, z) for z in end_p)
            checks.append(check(section, f'{subject}: xi central', central, xi.matrix.format()))

            t_xi = modified_trace(F, P, xi)
            checks.append(check(section, f'{subject}: t(xi) = dim Hom', t_xi == dim_hom, f'{t_xi} = {dim_hom}'))

            if len(end_p) == 1:
                d = modified_trace(F, P, ModuleMap.identity(P))
                simple = bool(d) and xi == ModuleMap.identity(P).scale(A.field.scalar(dim_hom) / d)
                checks.append(check(section, f'{subject}: xi = dim Hom / d^m', simple, f'd^m = {d}'))

            class_trace = star_classes(F, ModuleMap.identity(P), ModuleMap.identity(Q)).trace(F)
            checks.append(check(section, f'{subject}: t(HS(id) * HS(id)) = dim Hom', class_trace == dim_hom,
                                f'{class_trace}'))

            alternate = dual_bases(F, P, Q, _alternate_basis(hom_space(P, Q)), _alternate_basis(hom_space(Q, P)))
            rng = derive_rng(seed, 'trace_field', P.name, Q.name)
            n_checks = samples if end_p and end_q else 0
            well_defined = commutative = independent = vanishing = hs_cyclic = True
            for _ in range(n_checks):
                f = random_map(P, P, end_p, rng)
                g = random_map(Q, Q, end_q, rng)
                a = random_map(P, P, end_p, rng)
                b = random_map(P, P, end_p, rng)
                shifted = f + compose(a, b) - compose(b, a)
                fg = star(F, f, g, pair)
                well_defined = well_defined and hs_trace(shifted) == hs_trace(f) and \
                    hs_trace(star(F, shifted, g, pair)) == hs_trace(fg)
                commutative = commutative and hs_trace(fg) == hs_trace(star(F, g, f, reverse))
                independent = independent and star(F, f, g, alternate) == fg
                if dim_hom == 0:
                    vanishing = vanishing and fg.is_zero()
                else:
                    u = random_map(P, Q, hom_space(P, Q), rng)
                    v = random_map(Q, P, hom_space(Q, P), rng)
                    hs_cyclic = hs_cyclic and hs_trace(compose(u, v)) == hs_trace(compose(v, u))
            checks.append(check(section, f'{subject}: HS well defined', well_defined, f'{n_checks} pairs'))
            checks.append(check(section, f'{subject}: HS(f*g) = HS(g*f)', commutative, f'{n_checks} pairs'))
            checks.append(check(section, f'{subject}: basis independence', independent, f'{n_checks} pairs'))
            if dim_hom == 0:
                checks.append(check(section, f'{subject}: block vanishing', vanishing, f'{n_checks} pairs'))
            else:
                checks.append(check(section, f'{subject}: HS cyclic', hs_cyclic, f'{n_checks} pairs'))

    table = trace_table(F, projectives)
    checks.append(info(section, 't(xi) table', table.format()))
    if A.complete and len(projectives) == len(A.idempotents):
        cartan = Matrix.from_rows(A.field, cartan_matrix(A).tolist())
        checks.append(check(section, 't(xi) = cartan', table == cartan, cartan.format()))
    checks.extend(verify_one_object(F, samples=samples, seed=seed))
    return checks


def verify_one_object(F, samples=50, seed=42):
    """For P = Q = A: xi_{A,A}(1) is the handle element of the algebra and HS(f * g) is [f(1) x_i g(1) x^i]."""
    section = 'trace_field'
    A = F.algebra
    regular = regular_module(A)
    handle = algebra_handle_element(F)
    checks = [
        check(section, 'A: handle element central',
              all(A.commutator(handle, A.basis_vector(i)).is_zero() for i in range(A.dim)), A.format_element(handle)),
        check(section, 'A: xi(1) = sum x_i x^i', handle_element(F, regular, regular).matrix @ A.unit == handle,
              A.format_element(handle)),
    ]
    rng = derive_rng(seed, 'one_object')
    basis = hom_space(regular, regular)
    space = hh0(A)
    agree = True
    for _ in range(samples):
        f = random_map(regular, regular, basis, rng)
        g = random_map(regular, regular, basis, rng)
        agree = agree and hs_trace(star(F, f, g)) == space.project(algebra_star(F, f.matrix @ A.unit, g.matrix @ A.unit))
    checks.append(check(section, 'A: module star = algebra star', agree, f'{samples} pairs'))
    return checks


def star_table(F, projectives):
    """Coordinates of HS(id_P) * HS(id_Q) in HH_0."""
    return {(P.name, Q.name): star_classes(F, ModuleMap.identity(P), ModuleMap.identity(Q))
            for P in projectives for Q in projectives}
