import pytest

from epgraph import _backend
from epgraph.catalog import build_spec, default_catalog_specs
from epgraph.groups import is_nilpotent


@pytest.fixture(scope="session")
def catalog():
    return [build_spec(s) for s in default_catalog_specs(64)]


@pytest.fixture(scope="session")
def nilpotent_catalog(catalog):
    return [G for G in catalog if is_nilpotent(G)]


@pytest.fixture(params=_backend.available())
def backend(request):
    return request.param
