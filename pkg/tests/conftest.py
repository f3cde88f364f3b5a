import pytest

from quadloc import constructions


@pytest.fixture(scope="session")
def g0():
    return constructions.build_G0()


@pytest.fixture(scope="session")
def g1():
    return constructions.build_G1()


@pytest.fixture(scope="session")
def g0p():
    return constructions.build_G0_prime()


@pytest.fixture(scope="session")
def g1p():
    return constructions.build_G1_prime()


@pytest.fixture(scope="session")
def k4p():
    return constructions.build_K4_projective()
