"""Constructive cycle-isolation solver.

For a connected graph other than a triangle, builds a set D of at most
floor(n/4) vertices whose closed neighborhood meets every cycle, by a
recursive case analysis on a maximum-degree vertex and on how the triangle
components left after deleting its closed neighborhood attach to the rest
of the graph. Every case records a trace step with a stable label so a run
can be replayed branch by branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .isolation import _component_links, is_cycle_isolating

CASE_LABELS = (
    "B0-forest",
    "B1-maxdeg2",
    "B2-dominated",
    "M0-no-triangles",
    "U3a",
    "U3b",
    "C1a",
    "C1b-acyclic",
    "C1b-C4",
    "C1b-C3-A",
    "C1b-C3-B",
    "C2-cross",
    "C2a",
    "C2b",
)


class GraphIsTriangle(ValueError):
    """The input graph is a triangle, the one connected graph with no small isolating set."""


class GraphDisconnected(ValueError):
    """The single-graph solver requires a connected input."""


class InternalProofViolation(RuntimeError):
    """A structural fact the case analysis relies on failed to hold.

    This always signals a bug in the solver, never a property of the input.
    """


@dataclass(frozen=True)
class TraceStep:
    """One recursion step: which case fired, what it added and removed.

    ``residual_components`` are the vertex sets of the components of
    G - removed, i.e. the subgraphs recursion continues on (empty for
    terminal cases, where ``removed`` is the whole vertex set).
    """

    case_label: str
    added: frozenset[int]
    removed: frozenset[int]
    residual_components: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class IsolationResult:
    vertices: frozenset[int]
    trace: tuple[TraceStep, ...]
    bound: int
    valid: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InternalProofViolation(message)


def cycle_isolating_set(g: Graph, deep_verify: bool = False) -> IsolationResult:
    """Cycle isolating set of size <= floor(n/4) for a connected non-triangle graph.

    With ``deep_verify`` the isolating property and the size bound are
    re-checked at every recursion level instead of only at the root.
    """
    if g.is_triangle():
        raise GraphIsTriangle("the triangle admits no cycle isolating set below 1 = n/3")
    if not g.is_connected():
        raise GraphDisconnected(
            "input must be connected; use cycle_isolating_set_any for arbitrary graphs"
        )
    steps: list[TraceStep] = []
    chosen = _solve(g, steps, deep_verify)
    bound = g.n // 4
    valid = is_cycle_isolating(g, chosen)
    _require(valid, "constructed set is not cycle isolating")
    _require(len(chosen) <= bound, f"|D| = {len(chosen)} exceeds bound {bound}")
    return IsolationResult(frozenset(chosen), tuple(steps), bound, valid)


def cycle_isolating_set_any(g: Graph, deep_verify: bool = False) -> IsolationResult:
    """Cycle isolating set for an arbitrary graph, solved component by component.

    Triangle components each contribute their smallest vertex (which
    dominates the component); other components go through the constructive
    solver. The reported bound is the sum of the per-component bounds:
    1 per triangle component, floor(n_H/4) otherwise.
    """
    steps: list[TraceStep] = []
    chosen: set[int] = set()
    bound = 0
    for comp in g.components():
        if comp.is_triangle():
            pick = min(comp.labels)
            chosen.add(pick)
            bound += 1
            steps.append(
                TraceStep("B2-dominated", frozenset({pick}), comp.label_set(), ())
            )
        else:
            chosen |= _solve(comp, steps, deep_verify)
            bound += comp.n // 4
    valid = is_cycle_isolating(g, chosen)
    _require(valid, "constructed set is not cycle isolating")
    _require(len(chosen) <= bound, f"|D| = {len(chosen)} exceeds bound {bound}")
    return IsolationResult(frozenset(chosen), tuple(steps), bound, valid)


def _solve(g: Graph, steps: list[TraceStep], deep_verify: bool) -> set[int]:
    # Precondition (maintained by all callers): g connected, not a triangle.
    chosen = _branch(g, steps, deep_verify)
    if deep_verify:
        _require(is_cycle_isolating(g, chosen), "subproblem set is not isolating")
        _require(len(chosen) <= g.n // 4, "subproblem set exceeds its n/4 bound")
    return chosen


def _solve_components(
    comps: list[Graph], steps: list[TraceStep], deep_verify: bool
) -> set[int]:
    chosen: set[int] = set()
    for comp in comps:
        chosen |= _solve(comp, steps, deep_verify)
    return chosen


def _branch(g: Graph, steps: list[TraceStep], deep_verify: bool) -> set[int]:
    everything = g.label_set()

    if g.is_forest():
        steps.append(TraceStep("B0-forest", frozenset(), everything, ()))
        return set()

    v, k = g.max_degree_vertex()

    if k <= 2:
        # Connected, max degree 2, not a forest: must be a cycle (of length >= 4).
        _require(
            all(g.degree(u) == 2 for u in g.labels),
            "max degree 2 non-forest is not a cycle",
        )
        steps.append(TraceStep("B1-maxdeg2", frozenset({v}), everything, ()))
        return {v}

    closed_v = g.closed_neighborhood([v])
    if closed_v == everything:
        steps.append(TraceStep("B2-dominated", frozenset({v}), everything, ()))
        return {v}

    residual = g.delete(closed_v)
    comps = residual.components()
    comp_sets = [c.label_set() for c in comps]
    nv = g.neighbors(v)
    links = _component_links(g, nv, comps)
    tri_idx = [i for i, c in enumerate(comps) if c.is_triangle()]

    if not tri_idx:
        steps.append(
            TraceStep("M0-no-triangles", frozenset({v}), closed_v, tuple(comp_sets))
        )
        return {v} | _solve_components(comps, steps, deep_verify)

    # Some component of g - N[v] is a triangle. Work from the smallest
    # neighbor of v that has an edge into a triangle component.
    linked_to_triangles: set[int] = set()
    for i in tri_idx:
        linked_to_triangles |= links[i]
    _require(bool(linked_to_triangles), "no neighbor of v reaches a triangle component")
    x = min(linked_to_triangles)

    tri_union: set[int] = set()
    for i in tri_idx:
        tri_union |= comp_sets[i]
    ux = g.neighbors(x) & tri_union
    ux_plus = frozenset({x}) | ux

    if len(ux) >= 3:
        return _branch_u3(g, v, x, ux_plus, steps, deep_verify)

    tri_linked_to_x = [i for i in tri_idx if x in links[i]]
    _require(
        1 <= len(tri_linked_to_x) <= 2,
        f"{len(tri_linked_to_x)} triangle components linked to x with |U_x| <= 2",
    )
    # Non-triangle components whose only link is x: these stay separate
    # whenever x and its surroundings are removed.
    lonely_sets = [
        comp_sets[i]
        for i, c in enumerate(comps)
        if i not in tri_idx and links[i] == {x}
    ]

    if len(tri_linked_to_x) == 1:
        return _branch_case1(
            g, v, k, x, comps[tri_linked_to_x[0]], lonely_sets, steps, deep_verify
        )
    t1, t2 = (comps[i] for i in tri_linked_to_x)
    cross_links = [links[i] - {x} for i in tri_linked_to_x]
    return _branch_case2(g, v, x, t1, t2, cross_links, steps, deep_verify)


def _branch_u3(
    g: Graph,
    v: int,
    x: int,
    ux_plus: frozenset[int],
    steps: list[TraceStep],
    deep_verify: bool,
) -> set[int]:
    # x together with its neighbors inside triangle components covers at
    # least 4 vertices, so spending one vertex on x pays for the removal.
    after = g.delete(ux_plus)
    comps = after.components()
    triangles = [c for c in comps if c.is_triangle()]
    if not triangles:
        steps.append(
            TraceStep("U3a", frozenset({x}), ux_plus, tuple(c.label_set() for c in comps))
        )
        return {x} | _solve_components(comps, steps, deep_verify)

    _require(len(triangles) == 1, "more than one triangle component after removing U_x+")
    block = triangles[0].label_set()
    _require(
        block == g.closed_neighborhood([v]) - {x},
        "triangle component after removing U_x+ is not N[v] minus x",
    )
    removal = ux_plus | block
    comps2 = g.delete(removal).components()
    _require(
        not any(c.is_triangle() for c in comps2),
        "triangle component survived the U3b removal",
    )
    steps.append(
        TraceStep("U3b", frozenset({x}), removal, tuple(c.label_set() for c in comps2))
    )
    return {x} | _solve_components(comps2, steps, deep_verify)


def _branch_case1(
    g: Graph,
    v: int,
    k: int,
    x: int,
    t: Graph,
    lonely_sets: list[frozenset[int]],
    steps: list[TraceStep],
    deep_verify: bool,
) -> set[int]:
    # Exactly one triangle component t is linked to x. Removing x and t
    # leaves one component around v plus the components linked only to x.
    vt = t.label_set()
    contact = g.neighbors(x) & vt
    _require(bool(contact), "x has no edge into its triangle component")
    y = min(contact)
    removal = frozenset({x}) | vt
    comps = g.delete(removal).components()

    around_v = None
    rest_sets = []
    for comp in comps:
        if v in comp:
            around_v = comp
        else:
            rest_sets.append(comp.label_set())
    _require(around_v is not None, "v vanished from G minus {x} and the triangle")
    _require(
        g.closed_neighborhood([v]) - {x} <= around_v.label_set(),
        "the component around v lost part of N[v]",
    )
    _require(
        sorted(rest_sets) == sorted(lonely_sets),
        "leftover components are not exactly the ones linked only to x",
    )

    if not around_v.is_triangle():
        steps.append(
            TraceStep("C1a", frozenset({y}), removal, tuple(c.label_set() for c in comps))
        )
        return {y} | _solve_components(comps, steps, deep_verify)

    # The component around v collapsed to a triangle: N[v] minus x, with
    # d(v) = 3. Everything now happens inside the 6 vertices of both
    # triangles; which cycles survive deleting N[x] there decides the case.
    vtp = around_v.label_set()
    _require(vtp == g.closed_neighborhood([v]) - {x}, "triangle around v is not N[v] minus x")
    _require(k == 3, "triangle around v forces max degree 3")
    w_block = vt | vtp
    nx_in_block = g.neighbors(x) & w_block
    _require(v in nx_in_block and y in nx_in_block, "x lost contact with v or y")
    inner = g.induced(w_block - nx_in_block)

    if inner.is_forest():
        removal = frozenset({x}) | w_block
        comps2 = g.delete(removal).components()
        _require(
            sorted(c.label_set() for c in comps2) == sorted(lonely_sets),
            "after removing x and both triangles, leftovers changed",
        )
        steps.append(
            TraceStep(
                "C1b-acyclic",
                frozenset({x}),
                removal,
                tuple(c.label_set() for c in comps2),
            )
        )
        return {x} | _solve_components(comps2, steps, deep_verify)

    triangle = _find_triangle(inner)
    if triangle is not None:
        return _branch_case1_c3(
            g, v, x, y, vt, vtp, triangle, lonely_sets, steps, deep_verify
        )
    _require(_find_four_cycle(inner) is not None, "cycle on <= 4 vertices is neither C3 nor C4")
    return _branch_case1_c4(
        g, v, x, y, vt, vtp, nx_in_block, lonely_sets, steps, deep_verify
    )


def _branch_case1_c4(
    g: Graph,
    v: int,
    x: int,
    y: int,
    vt: frozenset[int],
    vtp: frozenset[int],
    nx_in_block: frozenset[int],
    lonely_sets: list[frozenset[int]],
    steps: list[TraceStep],
    deep_verify: bool,
) -> set[int]:
    # A 4-cycle survives, so x touches the two triangles in v and y only,
    # and some edge joins the triangles away from both. Its endpoint u in
    # the x-side triangle dominates that triangle plus the far endpoint w.
    _require(nx_in_block == frozenset({v, y}), "a surviving 4-cycle needs N(x) in W = {v,y}")
    edge = None
    for u in sorted(vt - {y}):
        for w in sorted(vtp - {v}):
            if g.has_edge(u, w):
                edge = (u, w)
                break
        if edge:
            break
    _require(edge is not None, "no edge between the triangles off y and v")
    u, w = edge
    removal = frozenset({w}) | vt
    leftover = vtp - {v, w}
    _require(len(leftover) == 1, "triangle around v has the wrong size")
    rest = g.delete(removal)
    lonely_union: set[int] = set()
    for s in lonely_sets:
        lonely_union |= s
    _require(
        rest.label_set() == {v, x} | leftover | lonely_union,
        "remainder after the C4 removal has unexpected vertices",
    )
    _require(rest.is_connected(), "remainder after the C4 removal is disconnected")
    _require(not rest.is_triangle(), "remainder after the C4 removal is a triangle")
    steps.append(TraceStep("C1b-C4", frozenset({u}), removal, (rest.label_set(),)))
    return {u} | _solve(rest, steps, deep_verify)


def _branch_case1_c3(
    g: Graph,
    v: int,
    x: int,
    y: int,
    vt: frozenset[int],
    vtp: frozenset[int],
    triangle: frozenset[int],
    lonely_sets: list[frozenset[int]],
    steps: list[TraceStep],
    deep_verify: bool,
) -> set[int]:
    # A triangle survives deleting N[x] inside the two-triangle block; it
    # straddles them 2 + 1, and the lone vertex dominates the whole removal.
    in_vtp = triangle & (vtp - {v})
    in_vt = triangle & (vt - {y})
    _require(len(in_vtp) + len(in_vt) == 3, "surviving triangle leaks outside the block")
    if len(in_vtp) == 1:
        label = "C1b-C3-A"
        pivot = min(in_vtp)
        removal = (vt - {y}) | vtp
        expected_rest = {x, y}
    elif len(in_vt) == 1:
        label = "C1b-C3-B"
        pivot = min(in_vt)
        removal = vt | (vtp - {v})
        expected_rest = {x, v}
    else:
        raise InternalProofViolation("surviving triangle is not split 2+1")
    _require(
        removal <= g.closed_neighborhood([pivot]),
        "pivot does not dominate the C3 removal set",
    )
    rest = g.delete(removal)
    lonely_union: set[int] = set()
    for s in lonely_sets:
        lonely_union |= s
    _require(
        rest.label_set() == expected_rest | lonely_union,
        "remainder after the C3 removal has unexpected vertices",
    )
    _require(rest.is_connected(), "remainder after the C3 removal is disconnected")
    _require(not rest.is_triangle(), "remainder after the C3 removal is a triangle")
    steps.append(TraceStep(label, frozenset({pivot}), frozenset(removal), (rest.label_set(),)))
    return {pivot} | _solve(rest, steps, deep_verify)


def _branch_case2(
    g: Graph,
    v: int,
    x: int,
    t1: Graph,
    t2: Graph,
    cross_links: list[frozenset[int]],
    steps: list[TraceStep],
    deep_verify: bool,
) -> set[int]:
    # Two triangle components linked to x. If one of them also attaches to
    # another neighbor of v, remove x plus the OTHER one: everything else
    # coalesces around v, so no triangle component survives.
    vt1, vt2 = t1.label_set(), t2.label_set()
    for keep_links, remove_set in ((cross_links[1], vt1), (cross_links[0], vt2)):
        if keep_links:
            contact = g.neighbors(x) & remove_set
            _require(bool(contact), "x has no edge into the triangle being removed")
            y = min(contact)
            removal = frozenset({x}) | remove_set
            comps = g.delete(removal).components()
            _require(
                not any(c.is_triangle() for c in comps),
                "triangle component survived the cross-linked removal",
            )
            steps.append(
                TraceStep(
                    "C2-cross",
                    frozenset({y}),
                    removal,
                    tuple(c.label_set() for c in comps),
                )
            )
            return {y} | _solve_components(comps, steps, deep_verify)

    # Neither triangle reaches any other neighbor of v, so both are whole
    # components of g - x.
    comps_x = g.delete([x]).components()
    comp_sets_x = [c.label_set() for c in comps_x]
    _require(vt1 in comp_sets_x and vt2 in comp_sets_x, "t1/t2 are not components of g - x")
    extra_triangles = [
        c for c in comps_x if c.is_triangle() and c.label_set() not in (vt1, vt2)
    ]
    base_removal = frozenset({x}) | vt1 | vt2

    if not extra_triangles:
        comps = g.delete(base_removal).components()
        _require(
            sorted(c.label_set() for c in comps)
            == sorted(s for s in comp_sets_x if s not in (vt1, vt2)),
            "removing x and both triangles did not leave the other components of g - x",
        )
        _require(
            not any(c.is_triangle() for c in comps),
            "triangle component survived the C2a removal",
        )
        steps.append(
            TraceStep(
                "C2a", frozenset({x}), base_removal, tuple(c.label_set() for c in comps)
            )
        )
        return {x} | _solve_components(comps, steps, deep_verify)

    _require(len(extra_triangles) == 1, "more than one extra triangle component in g - x")
    vt3 = extra_triangles[0].label_set()
    _require(
        vt3 == g.closed_neighborhood([v]) - {x},
        "extra triangle component is not N[v] minus x",
    )
    removal = base_removal | vt3
    comps = g.delete(removal).components()
    _require(
        not any(c.is_triangle() for c in comps),
        "triangle component survived the C2b removal",
    )
    steps.append(
        TraceStep("C2b", frozenset({x}), removal, tuple(c.label_set() for c in comps))
    )
    return {x} | _solve_components(comps, steps, deep_verify)


def _find_triangle(g: Graph) -> frozenset[int] | None:
    """Smallest triangle of g by sorted vertex labels, or None."""
    for a, b, c in combinations(g.labels, 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            return frozenset({a, b, c})
    return None


def _find_four_cycle(g: Graph) -> tuple[int, ...] | None:
    """Some 4-cycle of g as an ordered vertex tuple, or None."""
    for a, b, c, d in combinations(g.labels, 4):
        for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            p, q, r, s = order
            if (
                g.has_edge(p, q)
                and g.has_edge(q, r)
                and g.has_edge(r, s)
                and g.has_edge(s, p)
            ):
                return order
    return None
