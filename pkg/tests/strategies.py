from hypothesis import strategies as st

from graphs import Graph


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = [(draw(st.integers(min_value=0, max_value=i - 1)), i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    """Random spanning tree plus a random subset of the remaining pairs."""
    tree = draw(trees(min_n=min_n, max_n=max_n))
    n = tree.n
    present = set(tree.edges)
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    extra = draw(st.lists(st.sampled_from(others), unique=True)) if others else []
    return Graph.from_edges(n, list(present) + extra)


@st.composite
def graph_text_permutations(draw, max_n: int = 8):
    """A connected graph with its edge lines shuffled and endpoints possibly swapped."""
    g = draw(connected_graphs(max_n=max_n))
    lines = draw(st.permutations([(u, v) if not draw(st.booleans()) else (v, u) for u, v in g.edges]))
    text = f"{g.n} {g.m}\n" + "".join(f"{u} {v}\n" for u, v in lines)
    return g, text
