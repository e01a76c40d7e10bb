from pathlib import Path

import pytest

from dicolor.core import from_edge_list
from dicolor.generators import directed_cycle, rotational_tournament
from dicolor.io import parse_edge_list

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str):
    return parse_edge_list((FIXTURES / name).read_text())


@pytest.fixture
def c3():
    return directed_cycle(3)


@pytest.fixture
def r5():
    return rotational_tournament(5)


@pytest.fixture
def digon():
    return from_edge_list(2, [(0, 1), (1, 0)])


@pytest.fixture
def star():
    # four edges into vertex 0, one out of it
    return from_edge_list(6, [(1, 0), (2, 0), (3, 0), (4, 0), (0, 5)])
