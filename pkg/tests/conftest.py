from pathlib import Path

import pytest

from ktupledom.graph import Graph

FIXTURES = Path(__file__).parent / "fixtures"

# augmented adjacency matrix of the 7-vertex example, rows/cols v1..v7
EXAMPLE_MATRIX = [
    [1, 1, 1, 1, 0, 0, 1],
    [1, 1, 1, 0, 0, 0, 1],
    [1, 1, 1, 0, 1, 1, 1],
    [1, 0, 0, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1],
]

# 1-based edges read off EXAMPLE_MATRIX
E7 = [(1, 2), (1, 3), (1, 4), (1, 7), (2, 3), (2, 7), (3, 5), (3, 6), (3, 7),
      (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)]


def complete(n):
    return Graph.from_edge_list(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def cycle(n):
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def two_triangles():
    return Graph.from_edge_list(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


@pytest.fixture
def fig1():
    return Graph.from_edge_list(7, [(a - 1, b - 1) for a, b in E7])


@pytest.fixture
def figure1_path():
    return FIXTURES / "figure1.graph"


@pytest.fixture
def c5_path():
    return FIXTURES / "c5.graph"
