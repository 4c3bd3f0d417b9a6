"""The right Nakayama functor N(X) = A* (x)_A X, its trace pairing and the twisted trace.

N(X) is built twice: as a quotient of A* (x)_k X and as the dual of the right
module Hom_A(X, A). The canonical map phi (x) x -> (f -> phi(f(x))) compares
the two models; it is invertible for every finite-dimensional X.
"""
import logging
from functools import cached_property

from src.exactla import Matrix, hstack, kron, quotient_map, rank, solve
from src.exceptions import ShapeMismatch
from src.rep import AModule, ModuleMap, PrincipalProjective, compose, hom_space, random_map, regular_module, \
    split_projective
from src.utils.checks import check, info
from src.utils.memo import memoized_on
from src.utils.seeding import derive_rng

logger = logging.getLogger(__name__)


def _name(module):
    return module.name or 'module'


class TensorConstruction:
    """A* (x)_k X modulo phi.a (x) x - phi (x) a.x; coordinates of A* (x) X are k * dim X + x."""

    def __init__(self, source):
        A = source.algebra
        field = A.field
        I_n = Matrix.identity(field, A.dim)
        I_d = Matrix.identity(field, source.dim)
        relations = hstack([kron(L.T, I_d) - kron(I_n, rho) for L, rho in zip(A.left_matrices, source.action)])
        self.quotient = quotient_map(relations)
        Q, S = self.quotient.projection, self.quotient.section
        action = [Q @ kron(R.T, I_d) @ S for R in A.right_matrices]
        self.module = AModule(A, action, name=f'N({_name(source)})')

    @property
    def projection(self):
        return self.quotient.projection

    @property
    def section(self):
        return self.quotient.section


class HomDualConstruction:
    """Hom_A(X, A)* with (a.psi)(f) = psi(f.a), in the basis dual to the solved hom basis."""

    def __init__(self, source):
        A = source.algebra
        field = A.field
        self.homs = hom_space(source, regular_module(A))
        m = len(self.homs)
        if m == 0:
            self.basis_matrix = Matrix.zeros(field, A.dim * source.dim, 0)
            self.module = AModule(A, [Matrix.zeros(field, 0, 0)] * A.dim, name=f'Hom({_name(source)},A)*')
            return
        self.basis_matrix = hstack([h.matrix.vec() for h in self.homs])
        right_actions = solve(self.basis_matrix,
                              hstack([(R @ h.matrix).vec() for R in A.right_matrices for h in self.homs]))
        action = [right_actions.particular[:, i * m:(i + 1) * m].T for i in range(A.dim)]
        self.module = AModule(A, action, name=f'Hom({_name(source)},A)*')

    def coordinates(self, f):
        """Coordinates of f in Hom_A(X, A) with respect to ``homs``."""
        return solve(self.basis_matrix, f.matrix.vec()).particular


class NakayamaImage:
    def __init__(self, source):
        self.source = source
        self.via_tensor = TensorConstruction(source)
        self.via_homdual = HomDualConstruction(source)
        # phi (x) x -> (f_l -> phi(f_l(x))): row l of the matrix is vec(f_l)
        evaluation = self.via_homdual.basis_matrix.T @ self.via_tensor.section
        self.comparison_iso = ModuleMap(self.via_tensor.module, self.via_homdual.module, evaluation)
        if not self.comparison_iso.is_isomorphism():
            raise RuntimeError(f'Comparison map for N({_name(source)}) is not invertible')

    @property
    def module(self):
        return self.via_tensor.module

    @cached_property
    def pairing_functional(self):
        """For X = Ae: the row vector of [phi (x) p] -> phi(p), i.e. read in A*e and evaluate at 1."""
        return self.source.inclusion_matrix.vec().T @ self.via_tensor.section

    @cached_property
    def inclusion_coordinates(self):
        return self.via_homdual.coordinates(self.source.inclusion)


@memoized_on(lambda X: X.algebra)
def nakayama_object(X):
    logger.debug(f'Building N({_name(X)}) of dimension {X.dim}')
    return NakayamaImage(X)


def nakayama_map(g):
    """N(g) = id_{A*} (x) g descended to the quotients."""
    NX = nakayama_object(g.source)
    NY = nakayama_object(g.target)
    I_n = Matrix.identity(g.source.field, g.source.algebra.dim)
    matrix = NY.via_tensor.projection @ kron(I_n, g.matrix) @ NX.via_tensor.section
    return ModuleMap(NX.module, NY.module, matrix, check=False)


def trace_pairing(f, g):
    """<f, g> = (g(f(e)))(1) for f: Ae -> X and g: X -> N(Ae).

    g(f(e)) lies in N(Ae) = A*e, read inside A* and evaluated at the unit.
    """
    P = f.source
    if not isinstance(P, PrincipalProjective):
        raise ShapeMismatch(f'The pairing needs an Ae presented source, got {P}')
    NP = nakayama_object(P)
    if g.source is not f.target or g.target is not NP.module:
        raise ShapeMismatch(f'Pairing needs g: {f.target} -> {NP.module}')
    value = NP.pairing_functional @ g.matrix @ f.matrix @ P.generator
    return value.entry(0, 0)


def _principal_twisted_trace(P, h):
    NP = nakayama_object(P)
    if h.source is not P or h.target is not NP.module:
        raise ShapeMismatch(f'Twisted trace needs h: {P} -> {NP.module}')
    # evaluate the functional kappa(h(e)) on Hom_A(Ae, A) at the inclusion Ae -> A
    functional = NP.comparison_iso.matrix @ h.matrix @ P.generator
    return (functional.T @ NP.inclusion_coordinates).entry(0, 0)


def twisted_trace(P, h):
    """t_P(h) = <id_P, h> for h: P -> N(P).

    Ae modules are evaluated in the Hom-dual model of N(P); any other
    projective goes through a presentation, t_P(h) = sum_i t_A(N(iota_i) h pi_i).
    """
    if isinstance(P, PrincipalProjective):
        return _principal_twisted_trace(P, h)
    if h.source is not P or h.target is not nakayama_object(P).module:
        raise ShapeMismatch(f'Twisted trace needs h: {P} -> N({P})')
    presentation = split_projective(P)
    regular = regular_module(P.algebra)
    total = P.field.scalar(0)
    for pi, iota in zip(presentation.projections, presentation.sections):
        total = total + _principal_twisted_trace(regular, compose(nakayama_map(iota), compose(h, pi)))
    return total


def pairing_gram(P, X):
    """Matrix of <f_s, g_t> over the solved bases of Hom(P, X) and Hom(X, N(P))."""
    NP = nakayama_object(P)
    forward = hom_space(P, X)
    backward = hom_space(X, NP.module)
    field = P.field
    values = field.zeros((len(forward), len(backward)))
    for s, f in enumerate(forward):
        for t, g in enumerate(backward):
            values[s, t] = trace_pairing(f, g).value
    return Matrix(field, values)


def verify_calabi_yau(P, X, samples=100, seed=42, Q=None):
    """Checks of the twisted Calabi-Yau structure for a projective P and an object X.

    Parameters
    ----------
    P : PrincipalProjective
        the projective whose pairing is checked
    X : AModule
        the object the pairing runs through
    samples : int, default=100
        number of random pairs (f, g) for the cyclicity check
    seed : int, default=42
        seed of the random pairs
    Q : PrincipalProjective, optional
        second projective of the cyclicity check; defaults to X if X is an
        Ae module, otherwise the cyclicity row is left out

    Returns
    -------
    list
        Check rows: Gram rank, cyclicity (when there is a Q), agreement of the two pairings and
        both naturality laws
    """
    if Q is None and isinstance(X, PrincipalProjective):
        Q = X
    subject = f'{_name(P)},{_name(X)}'
    section = 'calabi_yau'
    checks = []
    NP = nakayama_object(P)
    forward = hom_space(P, X)
    backward = hom_space(X, NP.module)

    gram = pairing_gram(P, X)
    r = rank(gram)
    checks.append(check(section, f'{subject}: gram rank', r == len(forward) == len(backward),
                        f'{r} of {len(forward)}x{len(backward)}'))

    if Q is not None:
        checks.append(_cyclicity(P, Q, samples, seed))

    agree = all(gram.entry(s, t) == twisted_trace(P, compose(g, f))
                for s, f in enumerate(forward) for t, g in enumerate(backward))
    checks.append(check(section, f'{subject}: pairing agreement', agree, f'{len(forward) * len(backward)} pairs'))

    endomorphisms = hom_space(X, X)
    natural_x = all(trace_pairing(a, compose(b, c)) == trace_pairing(compose(c, a), b)
                    for a in forward for b in backward for c in endomorphisms)
    checks.append(check(section, f'{subject}: naturality in X', natural_x,
                        f'{len(forward) * len(backward) * len(endomorphisms)} triples'))

    if Q is not None:
        maps_q_p = hom_space(Q, P)
        maps_x_nq = hom_space(X, nakayama_object(Q).module)
        natural_p = all(trace_pairing(a, compose(nakayama_map(b), c)) == trace_pairing(compose(a, b), c)
                        for a in forward for b in maps_q_p for c in maps_x_nq)
        checks.append(check(section, f'{subject}: naturality in P', natural_p,
                            f'{len(forward) * len(maps_q_p) * len(maps_x_nq)} triples'))
    checks.append(info(section, f'{subject}: gram', gram.format()))
    return checks


def _cyclicity(P, Q, samples, seed):
    """t_Q(f o g) = t_P(N(g) o f) for random f: P -> N(Q) and g: Q -> P."""
    NQ = nakayama_object(Q)
    f_basis = hom_space(P, NQ.module)
    g_basis = hom_space(Q, P)
    rng = derive_rng(seed, 'cyclicity', _name(P), _name(Q))
    pairs = samples if f_basis and g_basis else 0
    failures = 0
    for _ in range(pairs):
        f = random_map(P, NQ.module, f_basis, rng)
        g = random_map(Q, P, g_basis, rng)
        if twisted_trace(Q, compose(f, g)) != twisted_trace(P, compose(nakayama_map(g), f)):
            failures += 1
    return check('calabi_yau', f'{_name(P)},{_name(Q)}: cyclicity', failures == 0, f'{pairs - failures}/{pairs}')
