"""Exhaustive sweeps over chord diagrams, checking necessary homological
conditions for independence complexes of (bipartite) circle graphs to be
wedges of spheres.

Everything checked here is a necessary condition.  A clean report means "no
homological obstruction found", never that a homotopy type was verified.

Enumeration is deterministic; shard ``i`` of ``k`` takes the items whose
position in the stream is ``i`` mod ``k``.  Partial reports merge with a
commutative, associative fold, so any shard schedule gives the same report.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .chords import ChordDiagram, canonical_form, intersection_graph, is_canonical_representative
from .complexes import HomologyResult, field_betti, independence_complex, homology
from .graphs import (
    Graph,
    all_bipartitions,
    canonical_key,
    complement_graph,
    edged_components,
    is_bipartite,
)
from .naive import naive_graph_homology, to_elementary

log = logging.getLogger(__name__)

TASKS = ("torsion", "s0", "dim1")


def double_factorial_odd(n: int) -> int:
    """(2n-1)!!, the number of perfect matchings on 2n points."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def _matchings(free: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not free:
        yield []
        return
    a = free[0]
    for i in range(1, len(free)):
        rest = free[1:i] + free[i + 1:]
        for m in _matchings(rest):
            yield [(a, free[i])] + m


def enumerate_diagrams(n: int, dedupe: bool = False) -> Iterator[ChordDiagram]:
    """All perfect matchings on 2n circular points, in a fixed order.

    With ``dedupe`` only the representative of each rotation/reflection class
    (the diagram equal to its canonical form) is produced.
    """
    if n < 0:
        raise ValueError("chord count must be non-negative")
    for m in _matchings(list(range(2 * n))):
        pairing = [0] * (2 * n)
        for a, b in m:
            pairing[a], pairing[b] = b, a
        d = ChordDiagram(tuple(pairing))
        if dedupe and not is_canonical_representative(d):
            continue
        yield d


# ---------------------------------------------------------------------------
# per-graph analysis, cached on the isomorphism class


@dataclass(frozen=True)
class GraphFacts:
    homology: HomologyResult
    bipartite: bool
    icomponents: int  # connected components of I(G)
    complement_has_edge: bool
    max_edged_components: int  # over all bipartitions; 0 when not bipartite
    field_mismatch: bool  # mod-2 or mod-3 Betti numbers differ from the free ranks


_FACTS: dict[tuple, GraphFacts] = {}


def graph_facts(g: Graph) -> GraphFacts:
    key = canonical_key(g)
    facts = _FACTS.get(key)
    if facts is None:
        facts = _compute_facts(g)
        _FACTS[key] = facts
    return facts


def _compute_facts(g: Graph) -> GraphFacts:
    k = independence_complex(g)
    h = homology(k)
    free = h.betti()
    mismatch = field_betti(k, 2) != free or field_betti(k, 3) != free
    bip = is_bipartite(g)
    icomp = len(g.complement().components()) if g.n else 0
    has_edge = False
    max_edged = 0
    if bip is not None:
        has_edge = complement_graph(g, bip).num_edges() > 0
        max_edged = max(edged_components(complement_graph(g, b)) for b in all_bipartitions(g))
    return GraphFacts(h, bip is not None, icomp, has_edge, max_edged, mismatch)


# ---------------------------------------------------------------------------
# reports


def _merge_counts(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, val in b.items():
        if isinstance(val, dict):
            out[key] = _merge_counts(out.get(key, {}), val)
        elif key.startswith("max_"):
            out[key] = max(out.get(key, 0), val)
        else:
            out[key] = out.get(key, 0) + val
    return dict(sorted(out.items()))


@dataclass
class SearchReport:
    task: str
    n_min: int
    n_max: int
    bipartite_only: bool
    counters: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    def merge(self, other: "SearchReport") -> "SearchReport":
        if (self.task, self.bipartite_only) != (other.task, other.bipartite_only):
            raise ValueError("cannot merge reports of different searches")
        cx = sorted(self.counterexamples + other.counterexamples, key=lambda c: (c["n"], c["word"], c["reason"]))
        return SearchReport(
            self.task,
            min(self.n_min, other.n_min),
            max(self.n_max, other.n_max),
            self.bipartite_only,
            _merge_counts(self.counters, other.counters),
            cx,
        )

    @property
    def examined(self) -> int:
        return self.counters.get("examined", 0)

    @property
    def violations(self) -> int:
        return len(self.counterexamples)

    def verdict(self) -> str:
        if self.counterexamples:
            return f"{len(self.counterexamples)} counterexample candidate(s) found"
        return "no homological obstruction found"

    def to_json(self) -> dict:
        return {
            "task": self.task,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "bipartite_only": self.bipartite_only,
            "verdict": self.verdict(),
            "counters": self.counters,
            "counterexamples": self.counterexamples,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SearchReport":
        return cls(
            data["task"], data["n_min"], data["n_max"], data["bipartite_only"],
            data["counters"], data["counterexamples"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _bump(counters: dict, key: str, sub=None, by: int = 1) -> None:
    if sub is None:
        counters[key] = counters.get(key, 0) + by
    else:
        hist = counters.setdefault(key, {})
        hist[str(sub)] = hist.get(str(sub), 0) + by


def _violations(task: str, facts: GraphFacts) -> list[str]:
    h = facts.homology
    out = []
    if task == "torsion":
        if h.has_torsion():
            out.append("torsion in reduced homology")
        return out
    if not facts.bipartite:
        return out
    if task == "s0":
        if h.rank(0) > 1:
            out.append("rank H~0 > 1")
        if h.rank(0) == 1 and list(h.groups) != [0]:
            out.append("rank H~0 = 1 with other nonzero homology")
        if h.groups.get(0) and h.torsion(0):
            out.append("torsion in H~0")
        if facts.icomponents > 2:
            out.append("I(G) has more than two components")
        if facts.complement_has_edge and facts.icomponents != 1:
            out.append("complement graph has an edge but I(G) is disconnected")
    elif task == "dim1":
        if h.concentrated_in(1) and h.rank(1) >= 3:
            out.append("homology concentrated in degree 1 with rank >= 3")
        if facts.max_edged_components >= 4:
            out.append("complement graph with >= 4 edged components")
    return out


def _reverify(g: Graph, h: HomologyResult) -> None:
    """A counterexample candidate must be confirmed by the naive oracle."""
    ref = to_elementary(naive_graph_homology(list(g.adj)))
    if ref != h:
        raise RuntimeError(f"homology engines disagree on {g.adj}: {h} vs {ref}")


def run_sharded(
    task: str,
    n: int,
    shard: tuple[int, int] = (0, 1),
    bipartite_only: bool = False,
) -> SearchReport:
    """Process slice ``shard = (index, count)`` of the diagrams with ``n`` chords."""
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}; expected one of {TASKS}")
    index, count = shard
    if not 0 <= index < count:
        raise ValueError(f"bad shard {shard}")
    counters: dict = {}
    cx = []
    for pos, d in enumerate(enumerate_diagrams(n)):
        if pos % count != index:
            continue
        _bump(counters, "examined")
        if is_canonical_representative(d):
            _bump(counters, "canonical_classes")
        g = intersection_graph(d)
        facts = graph_facts(g)
        if facts.bipartite:
            _bump(counters, "bipartite")
        if bipartite_only and not facts.bipartite:
            continue
        _bump(counters, "in_scope")
        h = facts.homology
        if h.has_torsion():
            _bump(counters, "torsion_flags")
        else:
            _bump(counters, "torsion_free")
        if facts.field_mismatch:
            _bump(counters, "field_rank_mismatch")
        if n == 0 or h.degrees() == [-1]:
            _bump(counters, "empty_complex")
        _bump(counters, "b0_profile", h.rank(0))
        if h.is_trivial():
            _bump(counters, "contractible_homology")
        if h.concentrated_in(1):
            _bump(counters, "deg1_concentrated_ranks", h.rank(1))
        if facts.bipartite and n > 0:
            _bump(counters, "icomponents_profile", facts.icomponents)
            counters["max_complement_edged_components"] = max(
                counters.get("max_complement_edged_components", 0), facts.max_edged_components
            )
        reasons = _violations(task, facts)
        if task == "s0" and n == 0:
            reasons = []  # I of the empty graph is S^-1, outside the statement
        if reasons:
            _reverify(g, h)
            for reason in reasons:
                cx.append({
                    "n": n,
                    "word": str(canonical_form(d)),
                    "reason": reason,
                    "homology": h.to_json(),
                })
    _bump(counters, "counterexample_candidates", by=len(cx))
    report = SearchReport(task, n, n, bipartite_only, dict(sorted(counters.items())), [])
    return report.merge(SearchReport(task, n, n, bipartite_only, {}, cx))


def _run_job(job):
    return run_sharded(*job)


def run_search(
    task: str,
    n_max: int,
    bipartite_only: bool = False,
    shards: int = 1,
    n_min: int = 0,
    threads: int = 1,
    only_shard: int | None = None,
) -> SearchReport:
    """Sweep chord counts ``n_min..n_max``; shards may run on several processes."""
    shard_ids = range(shards) if only_shard is None else [only_shard]
    jobs = [(task, n, (i, shards), bipartite_only) for n in range(n_min, n_max + 1) for i in shard_ids]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_run_job, jobs))
    else:
        parts = [_run_job(job) for job in jobs]
    report = SearchReport(task, n_min, n_max, bipartite_only)
    for part in parts:
        report = report.merge(part)
        log.debug("merged %s n=%d: %d examined", task, part.n_min, part.examined)
    return report


def verify_wedge_necessary(n_max: int, bipartite_only: bool = True, **kw) -> SearchReport:
    """Reduced homology of I(G) must be torsion-free for a wedge of spheres."""
    return run_search("torsion", n_max, bipartite_only, **kw)


def verify_s0_or_connected(n_max: int, **kw) -> SearchReport:
    """For bipartite circle graphs: I(G) looks like S^0 homologically, or is connected."""
    return run_search("s0", n_max, True, **kw)


def verify_dim1_bound(n_max: int, **kw) -> SearchReport:
    """For bipartite circle graphs: no degree-1 concentrated homology of rank >= 3,
    and no complement graph with four or more components carrying edges."""
    return run_search("dim1", n_max, True, **kw)
