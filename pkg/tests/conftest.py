import pytest

from latnorm import corpus


@pytest.fixture(scope="session")
def entries():
    return {entry_id: corpus.load(entry_id) for entry_id in corpus.ENTRY_IDS}


@pytest.fixture(scope="session")
def l11(entries):
    return entries["L11"]


@pytest.fixture(scope="session")
def l13(entries):
    return entries["L13"]


@pytest.fixture(scope="session")
def l22(entries):
    return entries["L22"]
