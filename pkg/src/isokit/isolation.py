"""Isolation predicates: does deleting a closed neighborhood kill every cycle,
or every copy of a fixed pattern graph?

Also provides the component/link bookkeeping the constructive solver builds on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph


def is_cycle_isolating(g: Graph, candidate: Iterable[int]) -> bool:
    """True iff deleting N[candidate] from g leaves a forest."""
    closed = g.closed_neighborhood(candidate)
    return g.delete(closed).is_forest()


def contains_pattern(g: Graph, pattern: Graph) -> bool:
    """True iff g has a (not necessarily induced) subgraph isomorphic to pattern.

    Backtracking embedding search. Pattern vertices are matched most-connected
    first; candidate images are tried in ascending label order, so the search
    is deterministic. Intended for small patterns (a handful of vertices).
    """
    if pattern.n == 0:
        raise ValueError("pattern must have at least one vertex")
    if pattern.n > g.n or pattern.m > g.m:
        return False

    order = _matching_order(pattern)
    g_labels = g.labels
    g_adj = {v: g.neighbors(v) for v in g_labels}
    p_deg = {v: pattern.degree(v) for v in pattern.labels}

    assignment: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        pv = order[i]
        mapped_nbrs = [assignment[w] for w in pattern.neighbors(pv) if w in assignment]
        if mapped_nbrs:
            candidates = g_adj[mapped_nbrs[0]]
            for u in mapped_nbrs[1:]:
                candidates = candidates & g_adj[u]
            candidates = sorted(candidates)
        else:
            candidates = g_labels
        need = p_deg[pv]
        for gv in candidates:
            if gv in used or len(g_adj[gv]) < need:
                continue
            assignment[pv] = gv
            used.add(gv)
            if extend(i + 1):
                return True
            del assignment[pv]
            used.remove(gv)
        return False

    return extend(0)


def _matching_order(pattern: Graph) -> list[int]:
    # Highest degree first, then greedily prefer vertices with the most
    # already-ordered neighbors: keeps the candidate sets small.
    remaining = set(pattern.labels)
    order: list[int] = []
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                -len(pattern.neighbors(v) & set(order)),
                -pattern.degree(v),
                v,
            ),
        )
        order.append(best)
        remaining.remove(best)
    return order


def is_pattern_isolating(g: Graph, candidate: Iterable[int], pattern: Graph) -> bool:
    """True iff g minus N[candidate] contains no copy of pattern."""
    closed = g.closed_neighborhood(candidate)
    return not contains_pattern(g.delete(closed), pattern)


def triangle_components(g: Graph) -> list[Graph]:
    """The components of g that are triangles, in component order."""
    return [c for c in g.components() if c.is_triangle()]


@dataclass(frozen=True)
class LinkMap:
    """How the components left after deleting N[v] attach to v's neighbors.

    ``components[i]`` is linked to exactly the neighbors in
    ``component_links[i]``: each such neighbor of v has at least one edge
    into the component. Connectivity of the parent graph guarantees every
    component has a nonempty link set.
    """

    vertex: int
    components: tuple[Graph, ...]
    component_links: dict[int, frozenset[int]]

    def links_of(self, index: int) -> frozenset[int]:
        return self.component_links[index]


def link_map(g: Graph, v: int) -> LinkMap:
    """Component-to-neighbor link structure of g after deleting N[v].

    Requires g connected and N[v] a proper subset of the vertices.
    """
    if not g.is_connected():
        raise ValueError("link map requires a connected graph")
    closed = g.closed_neighborhood([v])
    if closed == g.label_set():
        raise ValueError(f"N[{v}] covers the whole graph; nothing is left to link")
    comps = g.delete(closed).components()
    nv = g.neighbors(v)
    links = _component_links(g, nv, comps)
    for i, linked in enumerate(links):
        if not linked:
            raise AssertionError(
                f"component {i} has no link to N({v}); the graph cannot be connected"
            )
    return LinkMap(
        vertex=v,
        components=tuple(comps),
        component_links={i: linked for i, linked in enumerate(links)},
    )


def _component_links(g: Graph, nv: frozenset[int], comps: list[Graph]) -> list[frozenset[int]]:
    # For each component, the members of nv with an edge into it.
    out = []
    for comp in comps:
        linked: set[int] = set()
        for w in comp.labels:
            linked |= g.neighbors(w) & nv
        out.append(frozenset(linked))
    return out
