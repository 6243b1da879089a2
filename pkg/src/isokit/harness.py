"""Exhaustive and randomized verification.

Enumerates every connected labeled graph on up to 7 vertices (edge-bitmask
sweep with a connectivity filter), certifies the constructive solver against
the exact oracle on all of them, censuses the extremal graphs up to
isomorphism, checks the block-family predictions, and fuzzes the solver on
random connected graphs.
"""

from __future__ import annotations

import math
import os
import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator

from .constructive import InternalProofViolation, cycle_isolating_set
from .exact import min_cycle_isolating, min_pattern_isolating
from .extremal import build_B, predicted_isolation
from .graph import Graph, build_graph, complete_graph, graph_from_edges
from .serialize import emit_graph6

ENUM_MAX_VERTICES = 7
CANONICAL_MAX_VERTICES = 8


def worker_cap() -> int:
    """Upper bound on internal worker count, from ISOKIT_THREADS.

    Plumbing only: results never depend on it. The current implementation
    runs everything on a single worker, which respects any positive cap;
    unset or unusable values mean "no cap requested" and report 1.
    """
    raw = os.environ.get("ISOKIT_THREADS", "")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)

# Adjacency bitmasks up to 7 bits resolve to shared frozensets.
_BITSETS = [frozenset(i for i in range(7) if mask >> i & 1) for mask in range(1 << 7)]


def _pair_table(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _chunk_tables(n: int) -> list[tuple[int, list[tuple[int, ...]]]]:
    # Split the edge mask into 7-bit chunks; per chunk value, precompute the
    # contribution to every vertex's neighbor mask.
    pairs = _pair_table(n)
    tables = []
    for start in range(0, len(pairs), 7):
        chunk_pairs = pairs[start : start + 7]
        rows: list[tuple[int, ...]] = []
        for value in range(1 << len(chunk_pairs)):
            nbr = [0] * n
            for bit, (i, j) in enumerate(chunk_pairs):
                if value >> bit & 1:
                    nbr[i] |= 1 << j
                    nbr[j] |= 1 << i
            rows.append(tuple(nbr))
        tables.append((start, rows))
    return tables


def _mask_connected(nbr: list[int], n: int) -> bool:
    seen = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= nbr[low.bit_length() - 1]
            m ^= low
        frontier = reach & ~seen
        seen |= frontier
    return seen == full


def _scan_connected(n: int) -> Iterator[tuple[int, list[int], Graph]]:
    # Yields (edge mask, neighbor masks, graph) for every connected labeled
    # graph on {0..n-1}, ascending mask order.
    if n == 1:
        yield 0, [0], build_graph(1, [])
        return
    tables = _chunk_tables(n)
    npairs = n * (n - 1) // 2
    bitsets = _BITSETS
    rng = range(n)
    for mask in range(1 << npairs):
        nbr = [0] * n
        for start, rows in tables:
            row = rows[(mask >> start) & 0x7F]
            for i in rng:
                nbr[i] |= row[i]
        if _mask_connected(nbr, n):
            adj = {i: bitsets[nbr[i]] for i in rng}
            yield mask, nbr, Graph._trusted(adj)


def enumerate_connected_labeled(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on {0..n-1}, each exactly once.

    Graphs come out in ascending order of their edge bitmask (pairs in
    lexicographic order). Guarded at n <= 7: one step up costs ~2^28 masks.
    """
    if not 1 <= n <= ENUM_MAX_VERTICES:
        raise ValueError(f"exhaustive enumeration is limited to 1 <= n <= {ENUM_MAX_VERTICES}")
    for _, _, g in _scan_connected(n):
        yield g


# -- canonical forms ------------------------------------------------------


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: the graph6 encoding of the
    lexicographically minimal upper-triangle bit string over all vertex
    relabelings. Equal byte strings <=> isomorphic graphs."""
    n = g.n
    if n > CANONICAL_MAX_VERTICES:
        raise ValueError(f"canonical form is limited to n <= {CANONICAL_MAX_VERTICES}")
    if n == 0:
        return chr(63).encode("ascii")
    index = {v: i for i, v in enumerate(g.labels)}
    nbr = [0] * n
    for u, w in g.edges():
        i, j = index[u], index[w]
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
    best = _min_chunks(nbr, n)
    edges = []
    for j in range(1, n):
        chunk = best[j]
        for i in range(j):
            if chunk >> (j - 1 - i) & 1:
                edges.append((i, j))
    return emit_graph6(build_graph(n, edges)).encode("ascii")


def _own_chunks(nbr: list[int], n: int) -> list[int]:
    chunks = [0]
    for j in range(1, n):
        ch = 0
        for i in range(j):
            ch = (ch << 1) | (nbr[j] >> i & 1)
        chunks.append(ch)
    return chunks


def _min_chunks(nbr: list[int], n: int) -> list[int]:
    # Branch-and-bound over partial relabelings; the identity labeling seeds
    # the incumbent. Chunk j holds column j of the upper triangle, MSB first.
    # When a partial assignment beats the incumbent's prefix, the suffix is
    # reset high so the subtree rebuilds it; every chunk value written comes
    # from a real assignment, so the final vector is realized end to end.
    best = _own_chunks(nbr, n)
    unreached = 1 << n  # larger than any j-bit chunk

    def descend(placed: list[int], used: int) -> None:
        pos = len(placed)
        if pos == n:
            return
        for q in range(n):
            if used >> q & 1:
                continue
            nq = nbr[q]
            ch = 0
            for p in placed:
                ch = (ch << 1) | (nq >> p & 1)
            if ch > best[pos]:
                continue
            if ch < best[pos]:
                best[pos] = ch
                for j in range(pos + 1, n):
                    best[j] = unreached
            descend(placed + [q], used | 1 << q)

    descend([], 0)
    return best


def _independence_number(nbr: list[int], n: int) -> int:
    alpha = 1
    for mask in range(1, 1 << n):
        size = bin(mask).count("1")
        if size <= alpha:
            continue
        ok = True
        m = mask
        while m:
            low = m & -m
            if nbr[low.bit_length() - 1] & mask:
                ok = False
                break
            m ^= low
        if ok:
            alpha = size
    return alpha


def _is_min_labeling(nbr: list[int], n: int) -> bool:
    # True iff no relabeling produces a lexicographically smaller bit string,
    # i.e. the graph is the canonical representative of its isomorphism class.
    alpha = _independence_number(nbr, n)
    prefix = (1 << alpha) - 1
    for i in range(alpha):
        if nbr[i] & prefix:
            return False  # some relabeling starts with a longer zero run
    own = _own_chunks(nbr, n)

    def smaller(placed: tuple[int, ...], used: int) -> bool:
        pos = len(placed)
        if pos == n:
            return False
        target = own[pos]
        for q in range(n):
            if used >> q & 1:
                continue
            nq = nbr[q]
            ch = 0
            for p in placed:
                ch = (ch << 1) | (nq >> p & 1)
            if ch > target:
                continue
            if ch < target:
                return True
            if smaller(placed + (q,), used | 1 << q):
                return True
        return False

    return not smaller((), 0)


# -- exhaustive theorem verification --------------------------------------


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of checking every connected labeled non-triangle graph on n vertices."""

    n: int
    graphs_checked: int
    max_iota_c: int
    expected: int
    extremal_count: int
    all_bounds_held: bool
    extremal_labeled: int = 0
    failures: tuple[str, ...] = ()

    def csv_row(self) -> str:
        return (
            f"{self.n},{self.graphs_checked},{self.max_iota_c},{self.expected},"
            f"{self.extremal_count},{str(self.all_bounds_held).lower()}"
        )


CSV_HEADER = "n,graphs_checked,max_iota_c,expected,extremal_count,all_bounds_held"


def verify_theorem1(n: int) -> TheoremReport:
    """Certify the n/4 bound exhaustively on n-vertex graphs.

    For every connected labeled graph other than the triangle: the
    constructive solver must return a verified isolating set within
    floor(n/4), and the exact oracle's maximum over all graphs must equal
    floor(n/4) (0 for n <= 3). Extremal graphs (oracle value == expected)
    are counted up to isomorphism by keeping canonical representatives only.
    """
    if not 1 <= n <= ENUM_MAX_VERTICES:
        raise ValueError(f"exhaustive verification is limited to 1 <= n <= {ENUM_MAX_VERTICES}")
    expected = n // 4
    checked = 0
    max_exact = 0
    extremal_labeled = 0
    extremal_classes = 0
    failures: list[str] = []
    for _, nbr, g in _scan_connected(n):
        if g.is_triangle():
            continue
        checked += 1
        try:
            result = cycle_isolating_set(g)
            if result.size > expected:
                failures.append(emit_graph6(g))
        except InternalProofViolation:
            failures.append(emit_graph6(g))
        exact = min_cycle_isolating(g)
        if exact.minimum > max_exact:
            max_exact = exact.minimum
        if exact.minimum == expected:
            extremal_labeled += 1
            if _is_min_labeling(nbr, n):
                extremal_classes += 1
    return TheoremReport(
        n=n,
        graphs_checked=checked,
        max_iota_c=max_exact,
        expected=expected,
        extremal_count=extremal_classes,
        all_bounds_held=not failures and max_exact == expected,
        extremal_labeled=extremal_labeled,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class PatternMaxReport:
    """Maximum exact pattern-isolation number over all connected labeled
    non-triangle graphs on n vertices."""

    n: int
    graphs_checked: int
    max_iota: int
    expected: int

    @property
    def matches(self) -> bool:
        return self.max_iota == self.expected


def verify_theorem2(n: int) -> PatternMaxReport:
    """Maximum triangle-isolation number over the same graph family as
    verify_theorem1; floor(n/4) is the sharp value."""
    if not 1 <= n <= ENUM_MAX_VERTICES:
        raise ValueError(f"exhaustive verification is limited to 1 <= n <= {ENUM_MAX_VERTICES}")
    triangle = complete_graph(3)
    checked = 0
    max_value = 0
    for _, _, g in _scan_connected(n):
        if g.is_triangle():
            continue
        checked += 1
        value = min_pattern_isolating(g, triangle).minimum
        if value > max_value:
            max_value = value
    return PatternMaxReport(n=n, graphs_checked=checked, max_iota=max_value, expected=n // 4)


@dataclass(frozen=True)
class Lemma2Report:
    """Oracle-vs-prediction comparison for the block family at one pattern."""

    pattern_order: int
    values: dict[int, int]
    skipped: tuple[int, ...]
    mismatches: tuple[tuple[int, int, int], ...]  # (n, oracle, predicted)

    @property
    def all_match(self) -> bool:
        return not self.mismatches


def verify_lemma2(pattern: Graph, n_max: int) -> Lemma2Report:
    """Check exact pattern isolation of the block family against floor(n/(k+1))."""
    if pattern.n > 4:
        raise ValueError("block-family verification is limited to patterns on <= 4 vertices")
    if n_max > 20:
        raise ValueError("block-family verification is limited to n_max <= 20")
    values: dict[int, int] = {}
    skipped: list[int] = []
    mismatches: list[tuple[int, int, int]] = []
    for n in range(1, n_max + 1):
        predicted = predicted_isolation(n, pattern)
        if predicted is None:
            skipped.append(n)
            continue
        oracle = min_pattern_isolating(build_B(n, pattern), pattern).minimum
        values[n] = oracle
        if oracle != predicted:
            mismatches.append((n, oracle, predicted))
    return Lemma2Report(
        pattern_order=pattern.n,
        values=values,
        skipped=tuple(skipped),
        mismatches=tuple(mismatches),
    )


# -- randomized checks -----------------------------------------------------


def random_connected(n: int, p: float, seed) -> Graph:
    """Edge-probability-p random connected graph, by rejection sampling.

    The generator contract (stable across versions, reproducible elsewhere):
    a Mersenne-Twister stream is seeded with ``random.Random(seed)``; each
    attempt draws one float per vertex pair in lexicographic order
    ((0,1), (0,2), ..., (n-2,n-1)) and keeps the edge iff the float is < p;
    disconnected attempts are discarded and the stream continues. Gives up
    after 10^4 rejections.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 < p <= 1:
        raise ValueError("edge probability must satisfy 0 < p <= 1")
    rng = random.Random(seed)
    pairs = _pair_table(n)
    for _ in range(10_000):
        edges = [pair for pair in pairs if rng.random() < p]
        g = build_graph(n, edges)
        if g.is_connected():
            return g
    raise RuntimeError(
        f"no connected sample in 10^4 attempts at n={n}, p={p}; try a larger p"
    )


@dataclass(frozen=True)
class FuzzViolation:
    trial: int
    trial_seed: str
    graph6: str
    message: str


@dataclass(frozen=True)
class FuzzReport:
    trials: int
    n_max: int
    seed: int
    branch_histogram: dict[str, int] = field(default_factory=dict)
    violations: tuple[FuzzViolation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def fuzz_constructive(trials: int, n_max: int, seed: int) -> FuzzReport:
    """Run the solver on random connected non-triangle graphs.

    Each trial t derives its own stream from the string "<seed>:<t>", picks
    n uniformly in [min(4, n_max), n_max] and an edge probability around the
    connectivity threshold, resamples triangles, and then requires a
    verified within-bound result. The histogram counts every trace step
    across all trials.
    """
    histogram: Counter[str] = Counter()
    violations: list[FuzzViolation] = []
    lo = min(4, n_max)
    for trial in range(trials):
        trial_seed = f"{seed}:{trial}"
        rng = random.Random(trial_seed)
        g = None
        for _ in range(100):
            n = rng.randint(lo, n_max)
            if n <= 2:
                p = 1.0
            else:
                p = min(1.0, rng.uniform(1.1, 3.0) * math.log(n) / n)
            candidate = random_connected(n, p, rng.getrandbits(64))
            if not candidate.is_triangle():
                g = candidate
                break
        if g is None:
            violations.append(
                FuzzViolation(trial, trial_seed, "", "could not sample a non-triangle graph")
            )
            continue
        try:
            result = cycle_isolating_set(g)
        except Exception as exc:  # anything from the solver is a finding
            violations.append(FuzzViolation(trial, trial_seed, emit_graph6(g), repr(exc)))
            continue
        histogram.update(step.case_label for step in result.trace)
        if not result.valid or result.size > result.bound:
            violations.append(
                FuzzViolation(
                    trial,
                    trial_seed,
                    emit_graph6(g),
                    f"size {result.size} vs bound {result.bound}, valid={result.valid}",
                )
            )
    return FuzzReport(
        trials=trials,
        n_max=n_max,
        seed=seed,
        branch_histogram=dict(histogram),
        violations=tuple(violations),
    )


def relabelings(g: Graph) -> Iterator[Graph]:
    """All vertex permutations of g onto the same label set (n! graphs)."""
    labels = g.labels
    edges = list(g.edges())
    for perm in permutations(labels):
        mapping = dict(zip(labels, perm))
        yield graph_from_edges(labels, [(mapping[u], mapping[w]) for u, w in edges])
