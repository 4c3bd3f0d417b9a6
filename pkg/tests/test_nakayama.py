import numpy as np
import pytest

from src.exactla import Matrix, rank
from src.exceptions import ShapeMismatch
from src.nakayama import nakayama_map, nakayama_object, pairing_gram, trace_pairing, twisted_trace, verify_calabi_yau
from src.rep import ModuleMap, compose, find_isomorphism, hom_space, injective, random_map, regular_module
from src.tensor import trivial_module, untwisting
from src.utils.checks import FAIL


def test_dimensions_of_nakayama_images(grp_f2c2, path_a2):
    assert nakayama_object(regular_module(grp_f2c2.algebra)).module.dim == 2
    P1, P2 = path_a2.projectives
    assert nakayama_object(P1).module.dim == 2
    assert nakayama_object(P2).module.dim == 1


@pytest.mark.parametrize('name', ['PathA2', 'Sweedler', 'GrpF3S3', 'Prod2'])
def test_comparison_map_is_an_isomorphism(catalog, name):
    for X in catalog(name).objects:
        NX = nakayama_object(X)
        assert NX.comparison_iso.is_isomorphism()
        assert NX.via_homdual.module.dim == NX.module.dim


def test_nakayama_of_projectives_is_injective(path_a2):
    A = path_a2.algebra
    for e, P in zip(A.idempotents, path_a2.projectives):
        NP = nakayama_object(P).module
        assert find_isomorphism(NP, injective(A, e), np.random.default_rng(0), attempts=50) is not None


def test_nakayama_map_is_a_functor(grp_f3s3):
    rng = np.random.default_rng(5)
    P1, P2 = grp_f3s3.projectives
    A = regular_module(grp_f3s3.algebra)
    f = random_map(P1, A, hom_space(P1, A), rng)
    g = random_map(A, P2, hom_space(A, P2), rng)
    assert nakayama_map(ModuleMap.identity(P1)) == ModuleMap.identity(nakayama_object(P1).module)
    assert nakayama_map(ModuleMap.zero(P1, A)).is_zero()
    assert nakayama_map(compose(g, f)) == compose(nakayama_map(g), nakayama_map(f))
    ModuleMap(nakayama_object(P1).module, nakayama_object(A).module, nakayama_map(f).matrix)


def test_pairing_on_ground_field(triv):
    A = regular_module(triv.algebra)
    NA = nakayama_object(A).module
    identity = ModuleMap.identity(A)
    u = untwisting(triv.frob_structure, A)
    assert trace_pairing(identity, u) == 1
    assert twisted_trace(A, u) == 1
    assert twisted_trace(A, ModuleMap.zero(A, NA)) == 0


def test_twisted_trace_of_frobenius_untwisting(grp_f2c2):
    A = regular_module(grp_f2c2.algebra)
    assert twisted_trace(A, untwisting(grp_f2c2.frob_structure, A)) == 1


def test_gram_of_regular_pairing_has_full_rank(grp_f2c2):
    A = regular_module(grp_f2c2.algebra)
    gram = pairing_gram(A, A)
    assert gram.shape == (2, 2)
    assert rank(gram) == 2


def test_pairing_needs_projective_source(grp_f2c2):
    k = trivial_module(grp_f2c2.hopf)
    A = regular_module(grp_f2c2.algebra)
    with pytest.raises(ShapeMismatch):
        trace_pairing(ModuleMap.zero(k, A), ModuleMap.zero(A, nakayama_object(A).module))


def test_pairing_of_inclusion_reads_functionals(path_a2):
    P1 = path_a2.projectives[0]
    A = regular_module(path_a2.algebra)
    NP = nakayama_object(P1).module
    inclusion = P1.inclusion
    values = [trace_pairing(inclusion, g) for g in hom_space(A, NP)]
    assert len(values) == 2
    assert any(value != 0 for value in values)


@pytest.mark.parametrize('name', ['GrpF2C2', 'PathA2', 'Sweedler', 'GrpF3S3'])
def test_calabi_yau_suite_passes(catalog, name):
    ws = catalog(name)
    for P in ws.all_projectives:
        for X in ws.all_projectives:
            checks = verify_calabi_yau(P, X, samples=20, seed=11)
            assert [c for c in checks if c.status == FAIL] == []


def test_calabi_yau_suite_on_non_projective_objects(path_a2, sweedler):
    for ws in (path_a2, sweedler):
        for X in ws.modules:
            checks = verify_calabi_yau(regular_module(ws.algebra), X, samples=10, seed=3)
            assert not any(c.failed for c in checks)
            assert not any(c.subject.endswith('cyclicity') for c in checks)


def test_symmetric_algebras_have_trivial_nakayama_twist(grp_f3s3):
    F = grp_f3s3.frob_structure
    for X in grp_f3s3.objects:
        assert nakayama_object(X).module.dim == X.dim
        assert untwisting(F, X).is_isomorphism()


def test_simple_without_maps_to_the_algebra_has_zero_image(path_a2):
    # S2 is not in the socle of A, so Hom(S2, A) = 0
    NS2 = nakayama_object(path_a2.module('S2'))
    assert NS2.module.dim == 0
    assert NS2.comparison_iso.matrix == Matrix.zeros(path_a2.field, 0, 0)
