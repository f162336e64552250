import pytest

from reflexo.catalog import NAMES, load_catalog
from reflexo.fibration import classify_fibres


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def configs(catalog):
    """classify_fibres for all 16 polygons, computed once per session."""
    return {name: classify_fibres(catalog[name]) for name in NAMES}
