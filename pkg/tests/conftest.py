import pytest

from subgraph import make_cyclic, make_dihedral
from subgraph.groupspec import make_alternating, make_quaternion, make_symmetric


@pytest.fixture
def s3():
    return make_symmetric(3)


@pytest.fixture
def q8():
    return make_quaternion()


@pytest.fixture
def c12():
    return make_cyclic(12)


@pytest.fixture
def d4():
    return make_dihedral(4)


@pytest.fixture
def a4():
    return make_alternating(4)
