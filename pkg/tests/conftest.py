"""Shared test fixtures for cutbench."""
from __future__ import annotations

import pytest

from cutbench.core.models import Graph, KarloffParams
from cutbench.families.karloff import karloff_generate
from tests.builders import complete, cycle, rook_graph, symplectic_graph


@pytest.fixture
def k2() -> Graph:
    """A single unit edge."""
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def triangle() -> Graph:
    """K_3."""
    return complete(3)


@pytest.fixture
def c4() -> Graph:
    """The 4-cycle, bipartite."""
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    """The 5-cycle, Max-Cut 4."""
    return cycle(5)


@pytest.fixture
def k4() -> Graph:
    """K_4, Max-Cut 4."""
    return complete(4)


@pytest.fixture
def path3() -> Graph:
    """Path on three vertices, irregular."""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def weighted_triangle() -> Graph:
    """Triangle with distinct non-unit weights."""
    return Graph.from_edges(3, [(0, 1, 2.0), (1, 2, 0.5), (0, 2, -1.0)])


@pytest.fixture
def rook16() -> Graph:
    """SRG(16, 6, 2, 2), the q3t member with t = 1."""
    return rook_graph(4)


@pytest.fixture(scope="session")
def w3() -> Graph:
    """SRG(40, 12, 2, 4)."""
    return symplectic_graph()


@pytest.fixture
def j631_params() -> KarloffParams:
    """(m, b) = (6, 1)."""
    return KarloffParams(m=6, b=1)


@pytest.fixture
def j631(j631_params: KarloffParams) -> Graph:
    """J(6, 3, 1): 20 vertices, 9-regular, Max-Cut 60."""
    return karloff_generate(j631_params)
