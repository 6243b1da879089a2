"""Immutable labeled undirected simple graphs.

Vertex labels are non-negative integers and need not be contiguous; induced
subgraphs keep the original labels, so vertex sets computed on a subgraph are
directly meaningful in the parent graph.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Graph:
    """An immutable simple graph: a fixed label set plus a symmetric adjacency map.

    Instances are safe to share freely; every operation returns a new graph
    and never mutates its inputs.
    """

    __slots__ = ("_adj", "_labels", "_m")

    def __init__(self, adjacency: dict[int, Iterable[int]]):
        adj: dict[int, frozenset[int]] = {}
        for v, nbrs in adjacency.items():
            if v < 0:
                raise ValueError(f"negative vertex label {v}")
            adj[v] = frozenset(nbrs)
        for v, nbrs in adj.items():
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for w in nbrs:
                if w not in adj:
                    raise ValueError(f"neighbor {w} of {v} is not a vertex")
                if v not in adj[w]:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        self._adj = adj
        self._labels = tuple(sorted(adj))
        self._m = sum(len(nbrs) for nbrs in adj.values()) // 2

    @classmethod
    def _trusted(cls, adj: dict[int, frozenset[int]]) -> "Graph":
        # Internal fast path: adjacency is already validated by construction.
        g = object.__new__(cls)
        g._adj = adj
        g._labels = tuple(sorted(adj))
        g._m = sum(len(nbrs) for nbrs in adj.values()) // 2
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def labels(self) -> tuple[int, ...]:
        """All vertex labels in ascending order."""
        return self._labels

    def label_set(self) -> frozenset[int]:
        return frozenset(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in sorted order."""
        for u in self._labels:
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def _check_vertex(self, v: int) -> None:
        if v not in self._adj:
            raise ValueError(f"vertex {v} is not in the graph")

    def _check_subset(self, vertices: Iterable[int]) -> frozenset[int]:
        s = frozenset(vertices)
        bad = s - self._adj.keys()
        if bad:
            raise ValueError(f"labels {sorted(bad)} are not in the graph")
        return s

    # -- the primitive operations used throughout ------------------------

    def closed_neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        """N[S]: the given vertices together with all of their neighbors."""
        s = self._check_subset(vertices)
        out = set(s)
        for v in s:
            out |= self._adj[v]
        return frozenset(out)

    def delete(self, vertices: Iterable[int]) -> "Graph":
        """The induced subgraph on all vertices NOT in the given set.

        Labels are preserved, so sets computed on the result apply to
        this graph unchanged.
        """
        s = self._check_subset(vertices)
        if not s:
            return self
        adj = self._adj
        return Graph._trusted({v: adj[v] - s for v in adj if v not in s})

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """The induced subgraph on exactly the given vertices."""
        s = self._check_subset(vertices)
        adj = self._adj
        return Graph._trusted({v: adj[v] & s for v in s})

    def components(self) -> list["Graph"]:
        """Connected components as graphs, ordered by smallest contained label.

        Component vertex sets partition the label set; each component's
        adjacency is shared with this graph (components are closed under
        adjacency, so no restriction is needed).
        """
        adj = self._adj
        out = []
        seen: set[int] = set()
        for root in self._labels:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(Graph._trusted({v: adj[v] for v in comp}))
        return out

    def component_count(self) -> int:
        adj = self._adj
        count = 0
        seen: set[int] = set()
        for root in self._labels:
            if root in seen:
                continue
            count += 1
            seen.add(root)
            stack = [root]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count

    def is_connected(self) -> bool:
        """True iff the graph is nonempty and every vertex reaches every other."""
        return self.n > 0 and self.component_count() == 1

    def is_forest(self) -> bool:
        """True iff the graph contains no cycle.

        Uses the identity: acyclic <=> edge count = vertex count - component
        count. The empty graph counts as a forest.
        """
        return self._m == self.n - self.component_count()

    def is_triangle(self) -> bool:
        """True iff the graph is a 3-clique (three vertices, three edges)."""
        return self.n == 3 and self._m == 3

    def max_degree_vertex(self) -> tuple[int, int]:
        """The (vertex, degree) pair of maximum degree; ties go to the smallest label."""
        if not self._adj:
            raise ValueError("empty graph has no vertices")
        adj = self._adj
        best = self._labels[0]
        best_deg = len(adj[best])
        for v in self._labels[1:]:
            d = len(adj[v])
            if d > best_deg:
                best, best_deg = v, d
        return best, best_deg

    # -- value semantics --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._labels, tuple(self._adj[v] for v in self._labels)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on labels 0..n-1 with the given edges (duplicates collapse).

    Rejects self-loops and labels outside 0..n-1.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, w in edges:
        if u == w:
            raise ValueError(f"self-loop ({u},{w}) is not allowed")
        if not (0 <= u < n and 0 <= w < n):
            raise ValueError(f"edge ({u},{w}) is out of range for n={n}")
        adj[u].add(w)
        adj[w].add(u)
    return Graph._trusted({v: frozenset(nbrs) for v, nbrs in adj.items()})


def graph_from_edges(labels: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on an explicit label set (labels need not be contiguous)."""
    adj: dict[int, set[int]] = {v: set() for v in labels}
    for u, w in edges:
        if u == w:
            raise ValueError(f"self-loop ({u},{w}) is not allowed")
        if u not in adj or w not in adj:
            raise ValueError(f"edge ({u},{w}) uses an unknown label")
        adj[u].add(w)
        adj[w].add(u)
    return Graph._trusted({v: frozenset(nbrs) for v, nbrs in adj.items()})


def path_graph(n: int) -> Graph:
    """P_n on labels 0..n-1."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n on labels 0..n-1 (requires n >= 3)."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    """K_n on labels 0..n-1."""
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
