import json

import pytest
from hypothesis import given, settings, strategies as st

from chordhom.chords import canonical_form
from chordhom.search import (
    SearchReport,
    double_factorial_odd,
    enumerate_diagrams,
    run_search,
    run_sharded,
    verify_dim1_bound,
    verify_s0_or_connected,
    verify_wedge_necessary,
)


@pytest.mark.parametrize("n, total, classes", [(0, 1, 1), (1, 1, 1), (2, 3, 2), (3, 15, 5), (4, 105, 17)])
def test_enumeration_counts(n, total, classes):
    ds = list(enumerate_diagrams(n))
    assert len(ds) == total == double_factorial_odd(n)
    assert len(set(ds)) == total
    assert len(list(enumerate_diagrams(n, dedupe=True))) == classes
    assert len({canonical_form(d) for d in ds}) == classes


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_enumeration_complete(n):
    assert sum(1 for _ in enumerate_diagrams(n)) == double_factorial_odd(n)


def test_enumeration_deterministic():
    assert list(enumerate_diagrams(4)) == list(enumerate_diagrams(4))


def test_enumeration_rejects_negative():
    with pytest.raises(ValueError):
        list(enumerate_diagrams(-1))


def test_torsion_small():
    for bip in (True, False):
        r = verify_wedge_necessary(3, bipartite_only=bip)
        assert r.counters.get("torsion_flags", 0) == 0
        assert r.counterexamples == []
        assert r.examined == 1 + 1 + 3 + 15
    r = verify_wedge_necessary(0, bipartite_only=False)
    assert r.counters["empty_complex"] == 1


def test_s0_and_dim1_small():
    r = verify_s0_or_connected(5)
    assert r.violations == 0
    assert r.verdict() == "no homological obstruction found"
    r = verify_dim1_bound(5)
    assert r.violations == 0
    assert r.counters["max_complement_edged_components"] <= 3


def test_c6_is_degree_one_extremal():
    r = verify_dim1_bound(6)
    assert r.counters["deg1_concentrated_ranks"].get("2", 0) > 0
    assert all(int(k) <= 2 for k in r.counters["deg1_concentrated_ranks"])


@settings(max_examples=10)
@given(st.sampled_from(["torsion", "s0", "dim1"]), st.integers(0, 5), st.integers(1, 7))
def test_shards_merge_to_full(task, n, k):
    full = run_sharded(task, n)
    parts = [run_sharded(task, n, (i, k)) for i in range(k)]
    merged = parts[0]
    for p in parts[1:]:
        merged = merged.merge(p)
    assert merged == full
    assert sum(p.examined for p in parts) == double_factorial_odd(n)
    # commutativity
    rev = parts[-1]
    for p in reversed(parts[:-1]):
        rev = rev.merge(p)
    assert rev == full


def test_run_search_threads_deterministic():
    a = run_search("s0", 5, True, shards=3, threads=1)
    b = run_search("s0", 5, True, shards=3, threads=3)
    assert a == b


def test_report_json_roundtrip():
    r = run_search("dim1", 4, True)
    data = json.loads(r.dumps())
    assert SearchReport.from_json(data) == r
    assert data["verdict"] == r.verdict()
    assert isinstance(data["counterexamples"], list)


def test_merge_rejects_mismatch():
    with pytest.raises(ValueError):
        SearchReport("s0", 0, 1, True).merge(SearchReport("dim1", 0, 1, True))


def test_bad_inputs():
    with pytest.raises(ValueError):
        run_sharded("nope", 2)
    with pytest.raises(ValueError):
        run_sharded("s0", 2, (3, 3))
