from itertools import combinations, permutations

import pytest
from hypothesis import given, settings

from isokit import (
    build_B,
    build_graph,
    complete_graph,
    contains_pattern,
    cycle_graph,
    is_cycle_isolating,
    is_pattern_isolating,
    link_map,
    path_graph,
    triangle_components,
)

from conftest import small_graphs


def exhaustive_contains(g, f):
    """Reference subgraph-containment check: try every injection."""
    g_labels = list(g.labels)
    f_labels = list(f.labels)
    if len(f_labels) > len(g_labels):
        return False
    for image in permutations(g_labels, len(f_labels)):
        mapping = dict(zip(f_labels, image))
        if all(g.has_edge(mapping[u], mapping[w]) for u, w in f.edges()):
            return True
    return False


def test_cycle_isolating_single_vertex_on_c4():
    assert is_cycle_isolating(cycle_graph(4), [0])


def test_cycle_isolating_bridged_triangles(two_triangles_bridged):
    # N[2] covers {0,1,2,3}; the leftover edge 4-5 is a forest.
    assert is_cycle_isolating(two_triangles_bridged, [2])
    assert not is_cycle_isolating(two_triangles_bridged, [0])


def test_cycle_isolating_misses_second_component():
    k4_pair = build_graph(
        8,
        [(i, j) for i in range(4) for j in range(i + 1, 4)]
        + [(i, j) for i in range(4, 8) for j in range(i + 1, 8)],
    )
    assert not is_cycle_isolating(k4_pair, [0])
    assert is_cycle_isolating(k4_pair, [0, 4])


def test_contains_pattern_examples():
    assert contains_pattern(complete_graph(4), complete_graph(3))
    assert not contains_pattern(cycle_graph(5), complete_graph(3))
    assert contains_pattern(path_graph(5), path_graph(3))


def test_contains_pattern_rejects_empty_pattern():
    with pytest.raises(ValueError):
        contains_pattern(path_graph(2), build_graph(0, []))


@given(small_graphs(max_n=8), small_graphs(max_n=4))
@settings(max_examples=150, deadline=None)
def test_contains_pattern_matches_exhaustive_search(g, f):
    assert contains_pattern(g, f) == exhaustive_contains(g, f)


def test_pattern_isolating_k1_is_domination():
    c6 = cycle_graph(6)
    k1 = build_graph(1, [])
    for size in range(3):
        for cand in combinations(c6.labels, size):
            isolating = is_pattern_isolating(c6, cand, k1)
            dominating = c6.closed_neighborhood(cand) == c6.label_set()
            assert isolating == dominating


def test_pattern_isolating_examples():
    assert is_pattern_isolating(complete_graph(4), [0], complete_graph(3))
    b8 = build_B(8, complete_graph(3))
    assert not is_pattern_isolating(b8, [], complete_graph(3))


def test_triangle_components():
    k3_plus_p4 = build_graph(7, [(0, 1), (0, 2), (1, 2), (3, 4), (4, 5), (5, 6)])
    tri = triangle_components(k3_plus_p4)
    assert [c.labels for c in tri] == [(0, 1, 2)]
    assert triangle_components(cycle_graph(6)) == []
    both = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    assert len(triangle_components(both)) == 2


def test_link_map_on_path():
    p4 = path_graph(4)
    lm = link_map(p4, 0)
    assert len(lm.components) == 1
    assert lm.components[0].labels == (2, 3)
    assert lm.links_of(0) == {1}


def test_link_map_on_block_family():
    b8 = build_B(8, complete_graph(3))
    lm = link_map(b8, 1)
    assert len(lm.components) == 1
    assert lm.components[0].label_set() == {6, 7, 8}
    assert lm.links_of(0) == {2}


def test_link_map_rejects_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="connected"):
        link_map(g, 0)


def test_link_map_rejects_dominating_vertex():
    with pytest.raises(ValueError, match="covers"):
        link_map(complete_graph(4), 0)


@given(small_graphs(max_n=8))
@settings(max_examples=150, deadline=None)
def test_link_map_covers_everything(g):
    if not g.is_connected():
        return
    v, _ = g.max_degree_vertex()
    if g.closed_neighborhood([v]) == g.label_set():
        return
    lm = link_map(g, v)
    covered = set(g.closed_neighborhood([v]))
    for comp in lm.components:
        covered |= comp.label_set()
    assert covered == g.label_set()
    assert all(lm.links_of(i) for i in range(len(lm.components)))


@given(small_graphs(max_n=7))
@settings(max_examples=100, deadline=None)
def test_isolating_is_monotone(g):
    smaller = [v for v in g.labels if v % 2 == 0]
    larger = smaller + [v for v in g.labels if v % 2 == 1]
    if is_cycle_isolating(g, smaller):
        assert is_cycle_isolating(g, larger)
    k3 = complete_graph(3)
    if is_pattern_isolating(g, smaller, k3):
        assert is_pattern_isolating(g, larger, k3)


@given(small_graphs(max_n=7))
@settings(max_examples=100, deadline=None)
def test_cycle_isolation_implies_triangle_isolation(g):
    subset = [v for v in g.labels if v % 2 == 0]
    if is_cycle_isolating(g, subset):
        assert is_pattern_isolating(g, subset, complete_graph(3))
