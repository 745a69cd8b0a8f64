import pytest

from hyperturan.core import disjoint_union, validate
from hyperturan.designs import construct_affine_plane, construct_projective_plane, construct_sts

FANO_BLOCKS = [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 0], [5, 6, 1], [6, 0, 2]]


@pytest.fixture
def fano():
    return validate(7, 3, FANO_BLOCKS)


@pytest.fixture
def ag3():
    return construct_affine_plane(3)


@pytest.fixture
def sts13():
    return construct_sts(13)


@pytest.fixture
def two_fanos(fano):
    return disjoint_union([fano, fano])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
