import pytest

from subnorm.harness.carriers import builtin_carrier
from subnorm.order import poset_from_hasse, validate_poset
from subnorm.subordination import ProtoSubAlg


@pytest.fixture(scope="session")
def b4():
    return builtin_carrier("b4")


@pytest.fixture(scope="session")
def b8():
    return builtin_carrier("b8")


@pytest.fixture(scope="session")
def chain2():
    return builtin_carrier("chain2")


@pytest.fixture(scope="session")
def chain3():
    return builtin_carrier("chain3")


@pytest.fixture(scope="session")
def chain4():
    return builtin_carrier("chain4")


@pytest.fixture(scope="session")
def fdl2():
    return builtin_carrier("fdl2")


@pytest.fixture(scope="session")
def antichain2():
    return validate_poset([[1, 0], [0, 1]], ["x", "y"])


@pytest.fixture(scope="session")
def v_poset():
    return poset_from_hasse(3, [(0, 1), (0, 2)], ["z", "x", "y"])


def leq_relation(lat) -> ProtoSubAlg:
    return ProtoSubAlg.from_pairs(
        lat, [(a, b) for a in range(lat.n) for b in range(lat.n) if lat.leq(a, b)])


@pytest.fixture(scope="session")
def b4_leq(b4):
    return leq_relation(b4)
