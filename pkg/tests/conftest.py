import pytest

from unitary_schemes import build_descriptor, char_table_closed, enumerate_isotropic


@pytest.fixture(scope="session")
def get_space():
    cache = {}

    def build(n, q):
        if (n, q) not in cache:
            cache[n, q] = enumerate_isotropic(n, q)
        return cache[n, q]

    return build


@pytest.fixture(scope="session")
def get_descriptor():
    cache = {}

    def build(n, q, mode="both"):
        if (n, q, mode) not in cache:
            cache[n, q, mode] = build_descriptor(n, q, mode=mode)
        return cache[n, q, mode]

    return build


@pytest.fixture(scope="session")
def get_table():
    cache = {}

    def build(n):
        if n not in cache:
            cache[n] = char_table_closed(n)
        return cache[n]

    return build
