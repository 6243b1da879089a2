"""Exact minimum isolation numbers by exhaustive subset search.

Ground truth for everything else in the package: sizes are enumerated from 0
upward, so the first witness found is guaranteed minimum. Candidate vertices
are ordered by descending degree, which tends to find witnesses early but
never changes the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .isolation import contains_pattern

DEFAULT_VERTEX_GUARD = 30
PATTERN_VERTEX_GUARD = 6


@dataclass(frozen=True)
class ExactResult:
    minimum: int
    witness: frozenset[int]
    subsets_examined: int


def _guard(g: Graph, max_vertices: int) -> None:
    if g.n > max_vertices:
        raise ValueError(
            f"graph has {g.n} vertices, above the exhaustive-search guard of "
            f"{max_vertices}; raise max_vertices explicitly if you really mean it"
        )


def _candidate_order(g: Graph) -> list[int]:
    return sorted(g.labels, key=lambda v: (-g.degree(v), v))


def min_cycle_isolating(g: Graph, max_vertices: int = DEFAULT_VERTEX_GUARD) -> ExactResult:
    """Smallest D such that g minus N[D] is a forest, with one witness."""
    _guard(g, max_vertices)
    adj = {v: g.neighbors(v) for v in g.labels}
    labels = g.labels
    order = _candidate_order(g)
    examined = 0
    for size in range(g.n + 1):
        for cand in combinations(order, size):
            examined += 1
            removed = set(cand)
            for v in cand:
                removed |= adj[v]
            if _forest_after(adj, labels, removed):
                return ExactResult(size, frozenset(cand), examined)
    raise AssertionError("unreachable: the full vertex set always isolates")


def _forest_after(
    adj: dict[int, frozenset[int]], labels: tuple[int, ...], removed: set[int]
) -> bool:
    # Acyclicity of the graph induced on labels minus removed, without
    # materializing the subgraph: edges = vertices - components.
    seen: set[int] = set()
    twice_edges = 0
    vertices = 0
    comps = 0
    for root in labels:
        if root in removed or root in seen:
            continue
        comps += 1
        seen.add(root)
        stack = [root]
        while stack:
            u = stack.pop()
            vertices += 1
            for w in adj[u]:
                if w in removed:
                    continue
                twice_edges += 1
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return twice_edges == 2 * (vertices - comps)


def min_pattern_isolating(
    g: Graph,
    pattern: Graph,
    max_vertices: int = DEFAULT_VERTEX_GUARD,
    max_pattern_vertices: int = PATTERN_VERTEX_GUARD,
) -> ExactResult:
    """Smallest D such that g minus N[D] contains no copy of pattern."""
    _guard(g, max_vertices)
    if pattern.n > max_pattern_vertices:
        raise ValueError(
            f"pattern has {pattern.n} vertices, above the guard of {max_pattern_vertices}"
        )
    order = _candidate_order(g)
    examined = 0
    for size in range(g.n + 1):
        for cand in combinations(order, size):
            examined += 1
            closed = g.closed_neighborhood(cand)
            if not contains_pattern(g.delete(closed), pattern):
                return ExactResult(size, frozenset(cand), examined)
    raise AssertionError("unreachable: deleting everything leaves nothing to contain")
