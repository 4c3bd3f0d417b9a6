import gc
import weakref

import numpy as np
import pytest

from src.algebra import corner_dimension
from src.catalog import CATALOG_NAMES, get_example_from_name
from src.exactla import Matrix
from src.exceptions import CompositionMismatch, NotIdempotent, NotIntertwiner, NotProjective, NotSubmodule
from src.rep import ModuleMap, compose, direct_sum, find_isomorphism, free_module, hom_space, injective, projective, \
    random_map, regular_module, split_projective, submodule, validate_module
from src.nakayama import nakayama_object
from src.tensor import tensor_module, trivial_module
from src.tracefield import hh0


@pytest.mark.parametrize('name', CATALOG_NAMES)
def test_catalog_modules_are_valid(catalog, name):
    for module in catalog(name).objects:
        assert validate_module(module) == [], module.name


def test_hom_space_dimensions(grp_f2c2, path_a2):
    A = regular_module(grp_f2c2.algebra)
    assert len(hom_space(A, A)) == 2
    P1, P2 = path_a2.projectives
    assert len(hom_space(P1, P2)) == 1
    S1, S2 = path_a2.modules
    assert hom_space(S1, S2) == ()


def test_hom_space_maps_intertwine(grp_f3s3):
    for M in grp_f3s3.objects:
        for N in grp_f3s3.objects:
            if M.dim * N.dim <= 18:
                for h in hom_space(M, N):
                    ModuleMap(M, N, h.matrix)


def test_hom_space_matches_corners(path_a2, grp_f3s3):
    for ws in (path_a2, grp_f3s3):
        A = ws.algebra
        for e, P in zip(A.idempotents, ws.projectives):
            for f, Q in zip(A.idempotents, ws.projectives):
                assert len(hom_space(P, Q)) == corner_dimension(A, e, f)


def test_module_map_rejects_non_intertwiner(grp_f2c2):
    A = regular_module(grp_f2c2.algebra)
    with pytest.raises(NotIntertwiner):
        ModuleMap(A, A, Matrix.from_rows(A.field, [[1, 0], [0, 0]]))


def test_compose_laws(grp_f3s3):
    rng = np.random.default_rng(3)
    P1, P2 = grp_f3s3.projectives
    A = regular_module(grp_f3s3.algebra)
    f = random_map(P1, A, hom_space(P1, A), rng)
    g = random_map(A, P2, hom_space(A, P2), rng)
    h = random_map(P2, P1, hom_space(P2, P1), rng)
    assert compose(ModuleMap.identity(A), f) == f
    assert compose(f, ModuleMap.identity(P1)) == f
    assert compose(compose(h, g), f) == compose(h, compose(g, f))
    with pytest.raises(CompositionMismatch):
        compose(f, g)


def test_projective_dimensions(path_a2, grp_f2c2):
    P1, P2 = path_a2.projectives
    assert (P1.dim, P2.dim) == (1, 2)
    A = grp_f2c2.algebra
    assert projective(A, A.unit).dim == 2
    assert grp_f2c2.projectives == [regular_module(A)]


def test_projective_needs_idempotent(grp_qc2):
    A = grp_qc2.algebra
    with pytest.raises(NotIdempotent):
        projective(A, A.basis_vector(1))


def test_projection_and_inclusion_split(grp_f3s3):
    for P in grp_f3s3.projectives:
        assert compose(P.projection, P.inclusion) == ModuleMap.identity(P)


def test_split_regular_module(grp_f2c2):
    A = regular_module(grp_f2c2.algebra)
    presentation = split_projective(A)
    assert presentation.n == 1
    assert compose(presentation.surjection, presentation.section) == ModuleMap.identity(A)


def test_trivial_module_of_local_group_algebra_is_not_projective(grp_f2c2):
    with pytest.raises(NotProjective):
        split_projective(trivial_module(grp_f2c2.hopf))


def test_tensor_with_projective_splits(grp_f3c3):
    J2 = grp_f3c3.module('J2')
    A = regular_module(grp_f3c3.algebra)
    PX = tensor_module(grp_f3c3.hopf, A, J2)
    presentation = split_projective(PX)
    assert presentation.n == PX.dim
    assert compose(presentation.surjection, presentation.section) == ModuleMap.identity(PX)


def test_explicit_generators_give_another_presentation(grp_f3s3):
    perm = grp_f3s3.module('perm')
    identity = Matrix.identity(perm.field, perm.dim)
    generators = [identity[:, 2:3], identity[:, 0:1], identity[:, 1:2], identity[:, 0:1]]
    presentation = split_projective(perm, generators)
    assert presentation.n == 4
    assert compose(presentation.surjection, presentation.section) == ModuleMap.identity(perm)


def test_diagonal_sum_of_identity_is_idempotent(path_a2):
    for P in path_a2.projectives:
        assert split_projective(P).diagonal_sum(ModuleMap.identity(P)) == P.idempotent


def test_direct_sum_and_free_module(grp_f2c2):
    A = regular_module(grp_f2c2.algebra)
    k = trivial_module(grp_f2c2.hopf)
    S = direct_sum(k, A)
    assert S.dim == 3
    assert compose(S.projection(1), S.inclusion(1)) == ModuleMap.identity(A)
    assert free_module(grp_f2c2.algebra, 3).dim == 6
    assert len(split_projective(free_module(grp_f2c2.algebra, 2)).generators) == 4


def test_submodule(grp_f3s3):
    perm = grp_f3s3.module('perm')
    std = grp_f3s3.module('std')
    assert std.dim == 2
    ModuleMap(std, perm, std.inclusion.matrix)
    with pytest.raises(NotSubmodule):
        submodule(perm, Matrix.column(perm.field, [1, 0, 0]))


def test_injective_modules(path_a2):
    A = path_a2.algebra
    e1, e2 = A.idempotents
    assert injective(A, e1).dim == 2
    assert injective(A, e2).dim == 1


def test_find_isomorphism(grp_f3s3):
    # the permutation module is induced from the trivial module of <(01)>
    perm = grp_f3s3.module('perm')
    P_plus = grp_f3s3.projectives[0]
    iso = find_isomorphism(perm, P_plus, np.random.default_rng(0), attempts=100)
    assert iso is not None and iso.is_isomorphism()
    assert find_isomorphism(grp_f3s3.module('sign'), trivial_module(grp_f3s3.hopf)) is None


def test_cached_constructions_keep_identity():
    ws = get_example_from_name('GrpF3C3').get_workspace()
    P = regular_module(ws.algebra)
    assert regular_module(ws.algebra) is P
    assert hom_space(P, P) is hom_space(P, P)
    assert tensor_module(ws.hopf, P, P) is tensor_module(ws.hopf, P, P)
    assert nakayama_object(P) is nakayama_object(P)
    assert hh0(ws.algebra) is hh0(ws.algebra)


def test_cached_constructions_are_released_with_the_workspace():
    ws = get_example_from_name('GrpF3C3').get_workspace()
    A, H = ws.algebra, ws.hopf
    P = regular_module(A)
    hom_space(P, P)
    tensor_module(H, P, P)
    nakayama_object(P)
    hh0(A)
    algebra, module = weakref.ref(A), weakref.ref(P)
    del ws, A, H, P
    gc.collect()
    assert algebra() is None
    assert module() is None
