"""Report sections of the trace_lab verbs.

Every function takes a Workspace and returns a list of Check rows in a fixed
order, so that equal inputs and seeds give identical reports.
"""
import logging

from src.algebra import cartan_matrix, validate_algebra
from src.exceptions import FrobeniusStructureError, NotPivotal, NotProjective
from src.nakayama import nakayama_object, pairing_gram, verify_calabi_yau
from src.rep import ModuleMap, direct_sum, find_isomorphism, injective, split_projective, \
    validate_module
from src.tensor import distinguished_object, dual_module, modified_trace, nakayama_twist_check, pivotal_structure, \
    tensor_module, trivial_module, untwisting, validate_hopf, verify_modified_trace, verify_partial_trace, \
    verify_pivot_monoidal
from src.tracefield import dual_bases, handle_element, hh0, star_table, trace_table, verify_trace_field
from src.utils.checks import check, info, skipped, violations_to_checks
from src.utils.seeding import derive_rng

logger = logging.getLogger(__name__)

all_sections_list = ['validate', 'calabi_yau', 'nakayama', 'hopf', 'frobenius', 'partial_trace', 'modified_trace',
                     'trace_field']

# tensor products above this dimension are left out of the pairwise suites
MAX_TENSOR_DIM = 18
NAKAYAMA_CONSTRUCTIONS = 20


def format_integers(values):
    return '[' + ','.join('[' + ','.join(str(int(v)) for v in row) + ']' for row in values) + ']'


def frobenius_or_reason(ws):
    """(FrobStructure, None), or (None, reason) when the workspace carries none."""
    if not ws.has_frobenius_data:
        return None, 'no Frobenius data'
    try:
        return ws.frob_structure, None
    except FrobeniusStructureError as error:
        return None, type(error).__name__


# ===== validate =====
def run_validate(ws):
    section = 'validate'
    checks = violations_to_checks(section, 'algebra', validate_algebra(ws.algebra))
    if ws.hopf is not None:
        checks.extend(violations_to_checks(section, 'hopf', validate_hopf(ws.hopf)))
    for module in ws.modules:
        checks.extend(violations_to_checks(section, f'module {module.name}', validate_module(module)))
    return checks


# ===== twisted Calabi-Yau pairing =====
def run_calabi_yau(ws, samples=100, seed=42):
    checks = []
    for P in ws.all_projectives:
        for X in ws.objects:
            logger.info(f'Calabi-Yau checks for ({P.name}, {X.name})')
            checks.extend(verify_calabi_yau(P, X, samples=samples, seed=seed))
    return checks


# ===== Nakayama functor =====
def _constructions(ws, rng):
    """Seeded direct sums and tensor products of small workspace objects."""
    small = [X for X in ws.objects if X.dim <= 4]
    built = []
    while len(built) < NAKAYAMA_CONSTRUCTIONS:
        X, Y = (small[int(i)] for i in rng.integers(0, len(small), size=2))
        if ws.hopf is not None and rng.integers(0, 2) == 1 and X.dim * Y.dim <= 9:
            built.append(tensor_module(ws.hopf, X, Y))
        else:
            built.append(direct_sum(X, Y, name=f'{X.name}+{Y.name}'))
    return built


def run_nakayama(ws, seed=42):
    section = 'nakayama'
    A = ws.algebra
    checks = []
    for X in ws.objects:
        NX = nakayama_object(X)
        checks.append(info(section, f'{X.name}: dim N(X)', f'{X.dim} -> {NX.module.dim}'))
        checks.append(check(section, f'{X.name}: comparison iso', NX.comparison_iso.is_isomorphism(),
                            NX.comparison_iso.matrix.format()))
    for i, (e, P) in enumerate(zip(A.idempotents, ws.projectives)):
        rng = derive_rng(seed, 'injective', i)
        iso = find_isomorphism(nakayama_object(P).module, injective(A, e), rng, attempts=100)
        checks.append(check(section, f'{P.name}: N(P) = (eA)*', iso is not None, f'dim {P.dim}'))

    if ws.hopf is not None:
        H = ws.hopf
        D = distinguished_object(H)
        unit_image = nakayama_object(trivial_module(H)).module
        checks.append(info(section, 'modular character', D.modular_character.format()))
        checks.append(check(section, 'N(k) = D^-1', unit_image.same_presentation(D.inverse_module),
                            '[' + ','.join(rho.format() for rho in unit_image.action) + ']'))
        for X in ws.objects:
            rng = derive_rng(seed, 'nakayama_twist', X.name)
            checks.append(check(section, f'{X.name}: N(X) = D^-1 (x) X^vv', nakayama_twist_check(H, X, rng),
                                f'dim {X.dim}'))

    F, reason = frobenius_or_reason(ws)
    if F is None:
        checks.append(skipped(section, 'untwisting', reason))
        return checks
    for X in ws.objects:
        checks.append(check(section, f'{X.name}: untwisting X -> N(X) iso', untwisting(F, X).is_isomorphism(),
                            f'dim {X.dim}'))
    for X in _constructions(ws, derive_rng(seed, 'constructions')):
        iso = nakayama_object(X).module.dim == X.dim and untwisting(F, X).is_isomorphism()
        checks.append(check(section, f'{X.name}: N(X) = X', iso, f'dim {X.dim}'))
    return checks


# ===== Hopf structure =====
def run_hopf(ws):
    section = 'hopf'
    if ws.hopf is None:
        return [skipped(section, 'hopf', 'no Hopf data')]
    H = ws.hopf
    checks = []
    D = distinguished_object(H)
    checks.append(info(section, 'distinguished object D', 'trivial' if D.is_trivial(H) else
                       f'k_(alpha o S), alpha = {D.modular_character.format()}'))
    for X in ws.objects:
        for side in ('left', 'right'):
            dual = dual_module(H, X, side)
            checks.append(check(section, f'{X.name}: {side} dual zigzags', dual.zigzags_hold(), dual.module.name))

    pivotal = None
    if ws.pivot is not None:
        try:
            pivotal = pivotal_structure(H, ws.pivot)
            checks.append(check(section, 'pivot', True, ws.algebra.format_element(ws.pivot)))
        except NotPivotal as error:
            checks.append(check(section, 'pivot', False, str(error)))
    if pivotal is not None:
        for X in ws.objects:
            checks.append(info(section, f'{X.name}: quantum dimension', pivotal.quantum_dimension(X)))
            for Y in ws.objects:
                if X.dim * Y.dim <= MAX_TENSOR_DIM:
                    checks.append(check(section, f'{X.name},{Y.name}: pivot monoidal',
                                        verify_pivot_monoidal(pivotal, X, Y), f'dim {X.dim * Y.dim}'))

    for P in ws.all_projectives:
        for X in ws.objects:
            if P.dim * X.dim > MAX_TENSOR_DIM:
                continue
            for left, right in ((P, X), (X, P)):
                product = tensor_module(H, left, right)
                try:
                    split_projective(product)
                    projective = True
                except NotProjective:
                    projective = False
                checks.append(check(section, f'{product.name}: projective', projective, f'dim {product.dim}'))
    return checks


# ===== symmetric Frobenius structure and its traces =====
def run_frobenius(ws):
    section = 'frobenius'
    F, reason = frobenius_or_reason(ws)
    if F is None:
        return [skipped(section, 'FrobStructure', reason)]
    checks = [check(section, 'FrobStructure', True, f'pivot {ws.algebra.format_element(ws.pivot)}')]
    for X in ws.objects:
        u = untwisting(F, X)
        checks.append(check(section, f'{X.name}: untwisting', u.is_isomorphism(), u.matrix.format()))
    return checks


def run_partial_trace(ws, samples=25, seed=42):
    section = 'partial_trace'
    F, reason = frobenius_or_reason(ws)
    if F is None:
        return [skipped(section, 'partial traces', reason)]
    checks = []
    for P in ws.all_projectives:
        for X in ws.objects:
            if P.dim * X.dim > MAX_TENSOR_DIM:
                continue
            logger.info(f'Partial trace checks for ({P.name}, {X.name})')
            checks.extend(verify_partial_trace(F, P, X, samples=samples, seed=seed))
    return checks


def run_modified_trace(ws, samples=25, seed=42):
    F, reason = frobenius_or_reason(ws)
    if F is None:
        return [skipped('modified_trace', 'modified traces', reason)]
    return verify_modified_trace(F, ws.all_projectives, samples=samples, seed=seed)


def run_trace_field(ws, samples=50, seed=42):
    F, reason = frobenius_or_reason(ws)
    if F is None:
        return [skipped('trace_field', 'trace field', reason)]
    return verify_trace_field(F, ws.projectives, samples=samples, seed=seed)


# ===== tables =====
def run_trace(ws):
    section = 'trace'
    checks = []
    for P in ws.all_projectives:
        for X in ws.objects:
            checks.append(info(section, f'{P.name},{X.name}: pairing gram', pairing_gram(P, X).format()))
    F, reason = frobenius_or_reason(ws)
    if F is None:
        checks.append(skipped(section, 'modified traces', reason))
        return checks
    for P in ws.all_projectives:
        checks.append(info(section, f'{P.name}: d^m', modified_trace(F, P, ModuleMap.identity(P))))
    for P in ws.projectives:
        for Q in ws.projectives:
            checks.append(info(section, f'{P.name},{Q.name}: trace gram', dual_bases(F, P, Q).gram.format()))
    return checks


def run_handle(ws):
    section = 'handle'
    F, reason = frobenius_or_reason(ws)
    if F is None:
        return [skipped(section, 'handle elements', reason)]
    checks = [info(section, f'{P.name},{Q.name}: xi', handle_element(F, P, Q).matrix.format())
              for P in ws.projectives for Q in ws.projectives]
    checks.append(info(section, 't(xi) table', trace_table(F, ws.projectives).format()))
    return checks


def run_star(ws):
    section = 'star'
    F, reason = frobenius_or_reason(ws)
    if F is None:
        return [skipped(section, 'star products', reason)]
    checks = [info(section, 'dim HH0', hh0(ws.algebra).dim)]
    for (p_name, q_name), product in star_table(F, ws.projectives).items():
        checks.append(info(section, f'HS(id_{p_name}) * HS(id_{q_name})', product.format()))
        checks.append(info(section, f't(HS(id_{p_name}) * HS(id_{q_name}))', product.trace(F)))
    return checks


def run_cartan(ws):
    return [info('cartan', 'cartan matrix', format_integers(cartan_matrix(ws.algebra)))]


def run_verify(ws, samples=100, seed=42):
    """Every suite, in report order."""
    checks = run_validate(ws)
    checks.extend(run_calabi_yau(ws, samples=samples, seed=seed))
    checks.extend(run_nakayama(ws, seed=seed))
    checks.extend(run_hopf(ws))
    checks.extend(run_frobenius(ws))
    checks.extend(run_partial_trace(ws, samples=samples // 4, seed=seed))
    checks.extend(run_modified_trace(ws, samples=samples // 4, seed=seed))
    checks.extend(run_trace_field(ws, samples=samples // 2, seed=seed))
    return checks
