import pytest
from hypothesis import settings

import gdecomp as g
from gdecomp.membership import check_Um_bruteforce

settings.register_profile("exact", max_examples=60, derandomize=True, deadline=None)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def grid3():
    return list(g.grid_matrices(3))


@pytest.fixture(scope="session")
def grid3_verdicts(grid3):
    return [(A, check_Um_bruteforce(A)) for A in grid3]


@pytest.fixture(scope="session")
def grid4_verdicts():
    return [(A, check_Um_bruteforce(A)) for A in g.grid_matrices(4)]
