"""Small named graphs and graph strategies shared by tests."""
from __future__ import annotations

import itertools

from hypothesis import strategies as st

from cutbench.core.models import Graph


def cycle(n: int) -> Graph:
    """C_n with unit weights."""
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """K_n with unit weights."""
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def rook_graph(k: int = 4) -> Graph:
    """K_k x K_k rook graph; for k = 4 it is SRG(16, 6, 2, 2)."""
    cells = [(i, j) for i in range(k) for j in range(k)]
    edges = [
        (a, b)
        for a, b in itertools.combinations(range(len(cells)), 2)
        if cells[a][0] == cells[b][0] or cells[a][1] == cells[b][1]
    ]
    return Graph.from_edges(len(cells), edges)


def symplectic_graph() -> Graph:
    """
    Collinearity graph of the symplectic quadrangle W(3), an SRG(40, 12, 2, 4).

    Points are the 40 projective points of GF(3)^4; two distinct points are
    adjacent when they are orthogonal under x1y3 - x3y1 + x2y4 - x4y2.
    """
    points = []
    for vec in itertools.product(range(3), repeat=4):
        nonzero = [x for x in vec if x]
        if nonzero and nonzero[0] == 1:
            points.append(vec)

    def form(x: tuple[int, ...], y: tuple[int, ...]) -> int:
        return (x[0] * y[2] - x[2] * y[0] + x[1] * y[3] - x[3] * y[1]) % 3

    edges = [
        (a, b)
        for a, b in itertools.combinations(range(len(points)), 2)
        if form(points[a], points[b]) == 0
    ]
    return Graph.from_edges(len(points), edges)


@st.composite
def weighted_graphs(
    draw: st.DrawFn, max_n: int = 8, integer: bool = False
) -> tuple[Graph, list[int]]:
    """A random weighted graph on 2..max_n vertices and a random side labeling."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    weight = (
        st.integers(min_value=-5, max_value=5).map(float)
        if integer
        else st.floats(min_value=-5, max_value=5, allow_nan=False)
    )
    weights = draw(st.lists(weight, min_size=len(chosen), max_size=len(chosen)))
    sides = draw(st.lists(st.sampled_from([-1, 1]), min_size=n, max_size=n))
    g = Graph.from_edges(n, [(u, v, w) for (u, v), w in zip(chosen, weights, strict=True)])
    return g, sides
