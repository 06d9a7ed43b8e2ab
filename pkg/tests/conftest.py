import pytest

from agcode.codedata import load_fixture
from agcode.precompute import precompute

_CACHE = {}


def get_pc(name):
    """Session-cached PrecomputedCode for a shipped fixture."""
    if name not in _CACHE:
        _CACHE[name] = precompute(load_fixture(name))
    return _CACHE[name]


@pytest.fixture(scope="session")
def hermitian():
    return get_pc("hermitian_f9_26")


@pytest.fixture(scope="session")
def rs63():
    return get_pc("rs_f64_63")


@pytest.fixture(scope="session")
def rs7():
    return get_pc("rs_f8_7")


@pytest.fixture(scope="session")
def klein_q1():
    return get_pc("klein_f8_q1")


@pytest.fixture(scope="session")
def klein_q2():
    return get_pc("klein_f8_q2")


@pytest.fixture(scope="session")
def suzuki():
    return get_pc("suzuki_f8_63")
