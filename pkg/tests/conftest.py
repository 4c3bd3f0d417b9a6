from functools import lru_cache

import pytest

from src.catalog import get_example_from_name


@lru_cache(maxsize=None)
def catalog_workspace(name):
    return get_example_from_name(name).get_workspace()


@pytest.fixture(scope='session')
def catalog():
    """Lookup of catalog workspaces by name, each built once per session."""
    return catalog_workspace


@pytest.fixture(scope='session')
def triv():
    return catalog_workspace('Triv')


@pytest.fixture(scope='session')
def grp_f2c2():
    return catalog_workspace('GrpF2C2')


@pytest.fixture(scope='session')
def grp_f3c3():
    return catalog_workspace('GrpF3C3')


@pytest.fixture(scope='session')
def grp_f3s3():
    return catalog_workspace('GrpF3S3')


@pytest.fixture(scope='session')
def grp_qc2():
    return catalog_workspace('GrpQC2')


@pytest.fixture(scope='session')
def path_a2():
    return catalog_workspace('PathA2')


@pytest.fixture(scope='session')
def sweedler():
    return catalog_workspace('Sweedler')


@pytest.fixture(scope='session')
def prod2():
    return catalog_workspace('Prod2')
