"""The extremal block family: a spine path with pattern blocks hung off it.

For a k-vertex pattern F and n >= k+1 vertices, the graph consists of a
path-with-leaves spine on b = n - k*floor(n/(k+1)) vertices and
a = floor(n/(k+1)) disjoint copies of F, copy i joined completely to spine
vertex i. Isolating F-copies from it provably needs one vertex per block,
which makes the family the worst case for pattern isolation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, graph_from_edges


@dataclass(frozen=True)
class ExtremalParams:
    """Block-family arithmetic: a blocks of size k on a spine of b vertices."""

    n: int
    k: int
    a: int
    b: int


def nk_params(n: int, k: int) -> ExtremalParams:
    """a = floor(n/(k+1)) and b = n - k*a, with a <= b <= a + k."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    a = n // (k + 1)
    b = n - k * a
    assert a <= b <= a + k
    return ExtremalParams(n=n, k=k, a=a, b=b)


def build_star_path(params: ExtremalParams) -> Graph:
    """Spine graph on labels 1..b: path 1-2-...-a plus leaves a+1..b on vertex a."""
    a, b = params.a, params.b
    if a < 1:
        raise ValueError("spine needs at least one path vertex (a >= 1)")
    edges = [(i, i + 1) for i in range(1, a)]
    edges += [(a, j) for j in range(a + 1, b + 1)]
    return graph_from_edges(range(1, b + 1), edges)


def build_B(n: int, pattern: Graph) -> Graph:
    """The n-vertex block family for the given pattern.

    For n <= k this degenerates to the path on labels 1..n. Otherwise the
    labeling is canonical: spine vertices 1..b first, then the blocks in
    spine order, each block's vertices following the pattern's labels in
    ascending order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = pattern.n
    if k < 1:
        raise ValueError("pattern must have at least one vertex")
    if n <= k:
        return graph_from_edges(range(1, n + 1), [(i, i + 1) for i in range(1, n)])

    params = nk_params(n, k)
    a, b = params.a, params.b
    spine = build_star_path(params)
    labels = list(range(1, b + 1))
    edges = list(spine.edges())
    pattern_order = sorted(pattern.labels)
    for i in range(1, a + 1):
        base = b + (i - 1) * k
        relabel = {orig: base + pos + 1 for pos, orig in enumerate(pattern_order)}
        block = [relabel[orig] for orig in pattern_order]
        labels += block
        edges += [(relabel[u], relabel[w]) for u, w in pattern.edges()]
        edges += [(i, u) for u in block]
    built = graph_from_edges(labels, edges)
    assert built.n == n
    return built


def predicted_isolation(n: int, pattern: Graph) -> int | None:
    """floor(n/(k+1)), or None in the one excluded case (n = k and pattern a k-path)."""
    k = pattern.n
    if n == k and _is_path_shaped(pattern):
        return None
    return n // (k + 1)


def _is_path_shaped(g: Graph) -> bool:
    if g.n == 0 or not g.is_connected() or not g.is_forest():
        return False
    return all(g.degree(v) <= 2 for v in g.labels)
