from hypothesis import strategies as st

from connsub.graph import Graph


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8, max_extra: int = 6):
    """Random spanning tree plus a few extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        p = draw(st.integers(0, v - 1))
        edges.add((p, v))
    spare = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    if spare:
        extra = draw(st.lists(st.sampled_from(spare), unique=True, max_size=max_extra))
        edges.update(extra)
    return Graph.from_edges(n, edges)


@st.composite
def any_graphs(draw, min_n: int = 1, max_n: int = 7):
    """Arbitrary simple graphs, possibly disconnected."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)
