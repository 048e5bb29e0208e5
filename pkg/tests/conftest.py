import pytest

from periplectiq.tensorrep import TensorModule


@pytest.fixture(scope="session")
def module():
    cache = {}

    def get(n, k):
        if (n, k) not in cache:
            cache[(n, k)] = TensorModule(n, k)
        return cache[(n, k)]

    return get
