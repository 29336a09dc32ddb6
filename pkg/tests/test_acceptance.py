"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -s`` (or plain ``pytest -v``; the lines
are written past output capture) or ``python tests/test_acceptance.py``.
"""

import random
import sys
import time

import pytest

from chordhom.certificates import (
    Join,
    Sphere,
    Unknown,
    Wedge,
    find_fold,
    find_pendant,
    normalize,
    reduce,
    render,
)
from chordhom.chords import connected_sum, intersection_graph
from chordhom.complexes import HomologyResult, homology, independence_homology
from chordhom.fixtures import graph_metadata, load_complex, load_dow, load_graph
from chordhom.graphs import Graph
from chordhom.khovanov import extreme_khovanov, extreme_khovanov_from_graphs, jmin, pretzel_pd
from chordhom.naive import naive_graph_homology, to_elementary
from chordhom.search import double_factorial_odd, enumerate_diagrams, run_search, run_sharded

from conftest import random_graph


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        line = f"ACCEPTANCE {k}: {'PASS' if ok else 'FAIL'} - {detail}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    return emit


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_pretzel(report):
    def run():
        d = pretzel_pd([3, 4, 5, -5])
        g = jmin(d)
        return g, extreme_khovanov(d)

    (g, kh), dt = timed(run)
    ok = (g.p, g.n, g.k, g.j_min) == (12, 5, 7, -5) and kh.groups == HomologyResult.sphere(-5) and dt < 1.0
    report(1, ok, f"(p,n,k)=({g.p},{g.n},{g.k}), {kh.summary()}, {dt:.3f}s")


def test_criterion_2_dprime(report):
    def run():
        g = load_graph("star4+tree13")
        meta = graph_metadata("star4+tree13")
        h = independence_homology(g)
        cert, residuals = reduce(g)
        n = meta["negative"]
        kh = extreme_khovanov_from_graphs([g], n, meta["positive"] - 2 * n - meta["circles"])
        return h, cert, residuals, n, kh

    (h, cert, residuals, n, kh), dt = timed(run)
    target = extreme_khovanov(pretzel_pd([3, 4, 5, -5]))
    ok = (
        h == HomologyResult.sphere(4)
        and render(cert) == "S(4)"
        and not residuals
        and n == 10
        and kh.j_min == target.j_min == -5
        and kh.groups == target.groups
        and dt < 1.0
    )
    report(2, ok, f"H~ = {h}, certificate {render(cert)}, n={n}, {kh.summary()}, {dt:.3f}s")


def test_criterion_3_c6_sum(report):
    def run():
        c6 = load_dow("c6")
        g = intersection_graph(connected_sum(c6, 0, c6, 0))
        h = independence_homology(g)
        # symbolic: each residual C6 piece is S1 v S1
        cert, residuals = reduce(g)
        c6_cert = Wedge((Sphere(1), Sphere(1)))
        symbolic = normalize(_substitute(cert, c6_cert))
        direct = normalize(Join((c6_cert, c6_cert)))
        return h, residuals, symbolic, direct

    (h, residuals, symbolic, direct), dt = timed(run)
    c6_graph = intersection_graph(load_dow("c6"))
    want = "W(S(3),S(3),S(3),S(3))"
    ok = (
        h == HomologyResult.from_ranks({3: 4})
        and all(independence_homology(r) == independence_homology(c6_graph) for r in residuals)
        and render(symbolic) == render(direct) == want
        and dt < 1.0
    )
    report(3, ok, f"H~ = {h}, certificate {render(symbolic)}, {dt:.3f}s")


def _substitute(c, piece):
    if isinstance(c, Unknown):
        return piece
    if isinstance(c, (Wedge, Join)):
        return type(c)(tuple(_substitute(p, piece) for p in c.parts))
    return c


def test_criterion_4_oracle(report):
    def run():
        cases = [intersection_graph(d) for n in range(5) for d in enumerate_diagrams(n)]
        rng = random.Random(20240601)
        cases += [random_graph(rng, 9) for _ in range(500)]
        bad = [g for g in cases if independence_homology(g) != to_elementary(naive_graph_homology(list(g.adj)))]
        return len(cases), bad

    (count, bad), dt = timed(run)
    ok = not bad and dt < 300
    report(4, ok, f"{count} graphs, {len(bad)} mismatches, {dt:.1f}s")


def _plant(g: Graph, nbrs: int) -> Graph:
    adj = [a | (nbrs >> v & 1) << g.n for v, a in enumerate(g.adj)]
    return Graph(tuple(adj) + (nbrs,))


def test_criterion_5_reductions(report):
    rng = random.Random(7)
    checked = {"fold": 0, "pendant": 0}
    bad = 0
    while sum(checked.values()) < 1000:
        g = random_graph(rng, 8)
        if g.n == 0:
            continue
        u = rng.randrange(g.n)
        if rng.random() < 0.5:
            h = _plant(g, g.adj[u] | (rng.getrandbits(g.n) & ~(1 << u)))
            a, b = find_fold(h)
            ok = independence_homology(h.delete(1 << b)) == independence_homology(h)
            checked["fold"] += 1
        else:
            h = _plant(g, 1 << u)
            v, w = find_pendant(h)
            rest = h.delete(h.adj[w] | 1 << w)
            ok = independence_homology(h) == independence_homology(rest).shifted(1)
            checked["pendant"] += 1
        bad += not ok
    report(5, bad == 0, f"{checked['fold']} fold + {checked['pendant']} pendant instances, {bad} failures")


def test_criterion_6_sweeps(report):
    def run():
        return {
            "torsion": run_search("torsion", 6, bipartite_only=True),
            "torsion_all": run_search("torsion", 6, bipartite_only=False),
            "s0": run_search("s0", 6, bipartite_only=True),
            "dim1": run_search("dim1", 6, bipartite_only=True),
        }

    reps, dt = timed(run)
    c = {k: r.counters for k, r in reps.items()}
    ok = (
        all(r.counterexamples == [] for r in reps.values())
        and c["torsion"].get("torsion_flags", 0) == 0
        and c["torsion_all"].get("torsion_flags", 0) == 0
        and all(int(b) <= 1 for b in c["s0"]["b0_profile"])
        and all(int(r) <= 2 for r in c["dim1"].get("deg1_concentrated_ranks", {}))
        and c["dim1"]["max_complement_edged_components"] < 4
        and reps["s0"].examined == sum(double_factorial_odd(n) for n in range(7))
        and dt < 600
    )
    report(
        6,
        ok,
        f"{reps['s0'].examined} diagrams, {c['s0']['in_scope']} bipartite; torsion flags "
        f"{c['torsion'].get('torsion_flags', 0)}/{c['torsion_all'].get('torsion_flags', 0)}, "
        f"s0 violations {reps['s0'].violations}, dim1 violations {reps['dim1'].violations}, "
        f"max edged complement components {c['dim1']['max_complement_edged_components']}, {dt:.1f}s",
    )


def test_criterion_7_rp2(report):
    h = homology(load_complex("rp2"))
    ok = h.groups == {1: (0, (2,))}
    report(7, ok, f"H~(RP2) = {h}")


def test_criterion_8_shards(report):
    details = []
    ok = True
    for task in ("torsion", "s0", "dim1"):
        reps = [run_search(task, 6, bipartite_only=task != "torsion", shards=k) for k in (1, 4, 16)]
        ok &= reps[0] == reps[1] == reps[2]
        details.append(f"{task} identical={reps[0] == reps[1] == reps[2]}")
    for n in range(7):
        total = sum(run_sharded("torsion", n, (i, 16)).examined for i in range(16))
        ok &= total == double_factorial_odd(n)
    report(8, ok, ", ".join(details) + "; 16-shard counters sum to (2n-1)!! for n <= 6")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
