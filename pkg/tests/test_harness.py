"""Enumeration, canonical forms, random generation, fuzzing, reports."""

import pytest

from isokit import (
    CASE_LABELS,
    build_graph,
    canonical_form,
    complete_graph,
    cycle_graph,
    emit_graph6,
    enumerate_connected_labeled,
    fuzz_constructive,
    path_graph,
    random_connected,
    verify_lemma2,
    verify_theorem1,
    verify_theorem2,
)
from isokit.harness import _is_min_labeling, _scan_connected, relabelings

# Labeled connected graph counts on 1..5 vertices.
KNOWN_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728}

# Connected graphs minus trees, up to isomorphism: the extremal censuses.
KNOWN_EXTREMAL_CLASSES = {1: 1, 2: 1, 3: 1, 4: 4, 5: 18, 6: 106}


@pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_connected_labeled(n)) == count


def test_enumeration_guard():
    with pytest.raises(ValueError):
        list(enumerate_connected_labeled(8))
    with pytest.raises(ValueError):
        list(enumerate_connected_labeled(0))


def test_enumeration_yields_each_once_and_connected():
    seen = set()
    for g in enumerate_connected_labeled(4):
        assert g.is_connected()
        key = frozenset(g.edges())
        assert key not in seen
        seen.add(key)


def test_enumeration_is_permutation_consistent():
    # Relabeling every graph in the stream is a bijection on the stream.
    stream = {frozenset(g.edges()) for g in enumerate_connected_labeled(4)}
    perm = {0: 2, 1: 3, 2: 0, 3: 1}
    permuted = {
        frozenset((min(perm[u], perm[w]), max(perm[u], perm[w])) for u, w in key)
        for key in stream
    }
    assert permuted == stream


def test_canonical_form_is_isomorphism_invariant():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    forms = {canonical_form(h) for h in relabelings(g)}
    assert len(forms) == 1


def test_canonical_form_distinguishes():
    assert canonical_form(complete_graph(3)) != canonical_form(path_graph(3))


def test_canonical_form_guard():
    with pytest.raises(ValueError):
        canonical_form(path_graph(9))


def test_canonical_form_counts_classes_at_n4():
    forms = {canonical_form(g) for g in enumerate_connected_labeled(4)}
    assert len(forms) == 6  # connected graphs on 4 vertices, up to isomorphism


def test_min_labeling_agrees_with_canonical_form():
    # The census fast path and the public canonical form must agree on
    # which labeled graphs are their own class representative.
    for n in (4, 5):
        minimal = 0
        for _, nbr, g in _scan_connected(n):
            is_min = _is_min_labeling(nbr, n)
            assert is_min == (canonical_form(g) == emit_graph6(g).encode("ascii"))
            minimal += is_min
        # every class has exactly one minimal representative
        forms = {canonical_form(g) for g in enumerate_connected_labeled(n)}
        assert minimal == len(forms)


@pytest.mark.parametrize("n", range(1, 6))
def test_theorem1_small(n):
    report = verify_theorem1(n)
    assert report.all_bounds_held
    assert report.max_iota_c == report.expected == n // 4
    assert report.graphs_checked == KNOWN_COUNTS[n] - (1 if n == 3 else 0)
    assert report.extremal_count == KNOWN_EXTREMAL_CLASSES[n]
    assert not report.failures


def test_theorem1_csv_row():
    report = verify_theorem1(4)
    assert report.csv_row() == "4,38,1,1,4,true"


@pytest.mark.parametrize("n", range(1, 6))
def test_theorem2_small(n):
    report = verify_theorem2(n)
    assert report.max_iota == report.expected == n // 4
    assert report.matches


def test_lemma2_triangle_values():
    report = verify_lemma2(complete_graph(3), 8)
    assert report.all_match
    assert [report.values[n] for n in range(1, 9)] == [0, 0, 0, 1, 1, 1, 1, 2]
    assert report.skipped == ()


def test_lemma2_path_skips_excluded_case():
    report = verify_lemma2(path_graph(3), 6)
    assert report.all_match
    assert report.skipped == (3,)


def test_lemma2_guards():
    with pytest.raises(ValueError):
        verify_lemma2(complete_graph(5), 8)
    with pytest.raises(ValueError):
        verify_lemma2(complete_graph(3), 21)


def test_random_connected_is_deterministic():
    a = random_connected(8, 0.4, 42)
    b = random_connected(8, 0.4, 42)
    assert a == b
    assert a != random_connected(8, 0.4, 43)


def test_random_connected_golden_sample():
    # Frozen output of the documented generator algorithm.
    g = random_connected(8, 0.4, 42)
    assert sorted(g.edges()) == [
        (0, 2), (0, 3), (0, 4),
        (1, 2), (1, 4), (1, 5), (1, 7),
        (2, 3), (2, 6),
        (3, 5),
        (4, 5), (4, 6),
        (5, 6), (5, 7),
        (6, 7),
    ]
    assert emit_graph6(g) == "G\\pXYK"


def test_random_connected_full_probability_is_complete():
    assert random_connected(5, 1.0, 0) == complete_graph(5)


def test_random_connected_single_vertex():
    assert random_connected(1, 0.5, 123).n == 1


def test_random_connected_rejects_bad_probability():
    with pytest.raises(ValueError):
        random_connected(4, 0.0, 1)
    with pytest.raises(ValueError):
        random_connected(4, 1.5, 1)


def test_random_connected_gives_up_eventually():
    with pytest.raises(RuntimeError, match="attempts"):
        random_connected(12, 1e-9, 5)


def test_fuzz_smoke():
    report = fuzz_constructive(trials=60, n_max=24, seed=11)
    assert report.ok
    assert report.trials == 60
    assert set(report.branch_histogram) <= set(CASE_LABELS)
    assert sum(report.branch_histogram.values()) >= 60


def test_fuzz_single_trial():
    report = fuzz_constructive(trials=1, n_max=4, seed=0)
    assert report.ok
    assert sum(report.branch_histogram.values()) >= 1


def test_fuzz_is_deterministic():
    a = fuzz_constructive(trials=30, n_max=12, seed=3)
    b = fuzz_constructive(trials=30, n_max=12, seed=3)
    assert a.branch_histogram == b.branch_histogram


def test_cycle_c4_canonical_stable():
    forms = {canonical_form(h) for h in relabelings(cycle_graph(4))}
    assert forms == {canonical_form(cycle_graph(4))}


def test_worker_cap_env_plumbing(monkeypatch):
    from isokit.harness import worker_cap

    monkeypatch.delenv("ISOKIT_THREADS", raising=False)
    assert worker_cap() == 1
    monkeypatch.setenv("ISOKIT_THREADS", "3")
    assert worker_cap() == 3
    monkeypatch.setenv("ISOKIT_THREADS", "junk")
    assert worker_cap() == 1
    monkeypatch.setenv("ISOKIT_THREADS", "-2")
    assert worker_cap() == 1


def test_worker_cap_has_no_semantic_effect(monkeypatch):
    monkeypatch.setenv("ISOKIT_THREADS", "4")
    capped = fuzz_constructive(trials=20, n_max=10, seed=5)
    monkeypatch.delenv("ISOKIT_THREADS")
    plain = fuzz_constructive(trials=20, n_max=10, seed=5)
    assert capped.branch_histogram == plain.branch_histogram
