import pytest

from phonfeat import default_inventory


@pytest.fixture(scope="session")
def en_inv():
    return default_inventory("en")


@pytest.fixture(scope="session")
def cmn_inv():
    return default_inventory("cmn")
