import pytest
from hypothesis import strategies as st

from isokit import Graph, build_graph


def small_graphs(max_n: int = 8):
    """Hypothesis strategy for graphs on 1..max_n vertices, labels 0..n-1."""

    def build(data):
        n, picks = data
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = [pairs[k] for k in picks if k < len(pairs)]
        return build_graph(n, edges)

    return st.tuples(
        st.integers(min_value=1, max_value=max_n),
        st.lists(st.integers(min_value=0, max_value=max_n * (max_n - 1) // 2 - 1),
                 max_size=20, unique=True),
    ).map(build)


def has_cycle_by_traversal(g: Graph) -> bool:
    """Independent cycle test: DFS that flags any non-parent back-edge."""
    seen: set[int] = set()
    for root in g.labels:
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, None)]
        while stack:
            u, parent = stack.pop()
            for w in g.neighbors(u):
                if w == parent:
                    continue
                if w in seen:
                    return True
                seen.add(w)
                stack.append((w, u))
    return False


@pytest.fixture
def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return build_graph(10, edges)


@pytest.fixture
def two_triangles_bridged() -> Graph:
    # Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
