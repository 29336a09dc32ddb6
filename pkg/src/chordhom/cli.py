"""``chordhom`` command line: link diagram -> A-state -> circle graph -> I(D) -> homology."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import fixtures
from .certificates import reduce, render
from .chordio import dump_result, parse_dow, parse_pd, read_dow_file, result_record, validate_result
from .chords import intersection_graph
from .complexes import HomologyResult, SimplicialComplex, homology, independence_complex
from .errors import ChordhomError
from .graphs import Graph, is_bipartite
from .khovanov import LinkDiagram, a_state, crossing_signs, extreme_khovanov, jmin, pretzel_pd, state_graph
from .search import TASKS, run_search

log = logging.getLogger("chordhom")


class UsageError(Exception):
    pass


@dataclass
class Source:
    """One resolved input: exactly one of the three payloads is set."""

    label: str
    link: Optional[LinkDiagram] = None
    graph: Optional[Graph] = None
    complex: Optional[SimplicialComplex] = None

    def as_graph(self) -> Graph:
        if self.graph is not None:
            return self.graph
        if self.link is not None:
            return state_graph(a_state(self.link))
        raise UsageError(f"{self.label} is a simplicial complex, not a graph")

    def as_complex(self) -> SimplicialComplex:
        if self.complex is not None:
            return self.complex
        return independence_complex(self.as_graph())

    def as_link(self) -> LinkDiagram:
        if self.link is None:
            raise UsageError(f"{self.label} is not a link diagram; use --pd, --pd-file or --pretzel")
        return self.link


def parse_twists(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad pretzel twists {text!r}; expected e.g. 3,4,5,-5") from None


def _fixture_source(name: str) -> Source:
    label = f"fixture:{name}"
    name = fixtures.GRAPH_ALIASES.get(name, name)
    if (fixtures.FIXTURE_DIR / f"{name}.pd").exists():
        return Source(label, link=fixtures.load_pd(name))
    if (fixtures.FIXTURE_DIR / f"{name}.dow").exists():
        return Source(label, graph=intersection_graph(fixtures.load_dow(name)))
    if fixtures.is_graph_fixture(name):
        return Source(label, graph=fixtures.load_graph(name))
    if (fixtures.FIXTURE_DIR / f"{name}.json").exists():
        return Source(label, complex=fixtures.load_complex(name))
    raise UsageError(f"no fixture named {name!r} (have: {', '.join(fixtures.names())})")


def resolve_source(args) -> Source:
    if args.dow is not None:
        return Source(f"dow:{args.dow}", graph=intersection_graph(parse_dow(args.dow)))
    if args.dow_file is not None:
        diagrams = read_dow_file(args.dow_file)
        if len(diagrams) != 1:
            raise UsageError(f"{args.dow_file} holds {len(diagrams)} words; expected one")
        return Source(f"dow-file:{args.dow_file}", graph=intersection_graph(diagrams[0]))
    if args.pd is not None:
        return Source(f"pd:{args.pd}", link=parse_pd(args.pd))
    if args.pd_file is not None:
        return Source(f"pd-file:{args.pd_file}", link=parse_pd(Path(args.pd_file).read_text()))
    if args.pretzel is not None:
        return Source(f"pretzel:{args.pretzel}", link=pretzel_pd(parse_twists(args.pretzel)))
    if args.graph is not None:
        return Source(f"graph:{args.graph}", graph=fixtures.load_graph(args.graph))
    if args.fixture is not None:
        return _fixture_source(args.fixture)
    raise UsageError("no input given")


def homology_lines(h: HomologyResult) -> list[str]:
    if not h.groups:
        return ["all reduced homology vanishes"]
    out = []
    for d, (r, t) in h.groups.items():
        line = f"degree {d}: rank {r}"
        if t:
            line += f", torsion {list(t)}"
        out.append(line)
    return out


# ---------------------------------------------------------------------------
# subcommands; each returns (text lines, json payload)


def cmd_graph(src: Source, args):
    g = src.as_graph()
    labels = [g.label(v) for v in range(g.n)]
    lines = [f"vertices {g.n}: {' '.join(map(str, labels))}", f"edges {g.num_edges()}:"]
    lines += [f"  {g.label(u)} -- {g.label(v)}" for u, v in g.edges()]
    bip = is_bipartite(g)
    lines.append(f"bipartite: {'yes' if bip is not None else 'no'}")
    h = homology(independence_complex(g))
    lines += homology_lines(h)
    return lines, result_record(src.label, h)


def cmd_complex(src: Source, args):
    k = src.as_complex()
    h = homology(k)
    lines = [f"vertices {k.n_vertices}, dimension {k.dimension}", f"f-vector {k.f_vector()}", "facets:"]
    lines += ["  " + " ".join(map(str, f)) for f in k.facets]
    lines += homology_lines(h)
    return lines, result_record(src.label, h)


def cmd_homology(src: Source, args):
    h = homology(src.as_complex())
    return homology_lines(h), result_record(src.label, h)


def cmd_jmin(src: Source, args):
    grad = jmin(src.as_link())
    kh = extreme_khovanov(src.as_link())
    lines = [f"p = {grad.p}, n = {grad.n}, k = {grad.k}", f"j_min = {grad.j_min}"]
    return lines, result_record(src.label, kh.complex_homology, jmin=grad.j_min)


def cmd_kh(src: Source, args):
    kh = extreme_khovanov(src.as_link())
    return [kh.summary()], result_record(src.label, kh.groups, jmin=kh.j_min)


def cmd_pretzel(src: Source, args):
    d = src.as_link()
    p, n = crossing_signs(d)
    kh = extreme_khovanov(d)
    lines = [d.pd_text(), f"crossings {d.n_crossings}: positive {p}, negative {n}", kh.summary()]
    return lines, result_record(src.label, kh.groups, jmin=kh.j_min)


def cmd_reduce(src: Source, args):
    cert, residuals = reduce(src.as_graph())
    h = homology(independence_complex(src.as_graph()))
    lines = [render(cert)]
    if residuals:
        lines.append(f"{len(residuals)} irreducible residual(s); homology: " + "; ".join(homology_lines(h)))
    return lines, result_record(src.label, h, certificate=render(cert))


COMMANDS = {
    "graph": (cmd_graph, "intersection graph of the input"),
    "complex": (cmd_complex, "independence complex (or a complex fixture)"),
    "homology": (cmd_homology, "reduced integral homology of the complex"),
    "jmin": (cmd_jmin, "gradings p, n, k and j_min of a link diagram"),
    "kh": (cmd_kh, "extreme Khovanov homology Kh^{*, j_min}"),
    "pretzel": (cmd_pretzel, "PD code and extreme Khovanov homology of a pretzel diagram"),
    "reduce": (cmd_reduce, "homotopy certificate from graph reductions"),
}


def cmd_search(args) -> int:
    if args.shard is not None and not 0 <= args.shard < args.shards:
        raise UsageError(f"--shard must lie in 0..{args.shards - 1}")
    report = run_search(
        args.task,
        args.max_chords,
        bipartite_only=args.bipartite_only or args.task != "torsion",
        shards=args.shards,
        n_min=args.min_chords,
        threads=args.threads,
        only_shard=args.shard,
    )
    c = report.counters
    print(f"task {report.task}, chords {report.n_min}..{report.n_max}"
          + (", bipartite only" if report.bipartite_only else ""))
    for key in ("examined", "canonical_classes", "bipartite", "in_scope", "torsion_flags",
                "max_complement_edged_components", "counterexample_candidates"):
        print(f"{key}: {c.get(key, 0)}")
    for key in ("b0_profile", "deg1_concentrated_ranks"):
        hist = c.get(key, {})
        print(f"{key}: " + (", ".join(f"{k}:{v}" for k, v in sorted(hist.items(), key=lambda kv: int(kv[0]))) or "-"))
    for item in report.counterexamples:
        print(f"counterexample n={item['n']} [{item['word']}]: {item['reason']}")
    print(report.verdict())
    if args.json:
        Path(args.json).write_text(report.dumps() + "\n")
    return 0


def _add_inputs(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--dow", metavar="WORD", help='double-occurrence word, e.g. "1 2 1 2"')
    g.add_argument("--dow-file", metavar="FILE", help=".dow file holding one word")
    g.add_argument("--pd", metavar="TEXT", help='PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"')
    g.add_argument("--pd-file", metavar="FILE", help=".pd file")
    g.add_argument("--pretzel", metavar="T1,T2,...", help="pretzel twists, e.g. 3,4,5,-5")
    g.add_argument("--graph", metavar="NAME", help="graph fixture, e.g. star4+tree13")
    g.add_argument("--fixture", metavar="NAME", help="any shipped fixture by name")
    p.add_argument("--json", action="store_true", help="emit the JSON result record")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--seed", type=int, default=None, help="reserved; all computations are deterministic")
    parser = argparse.ArgumentParser(prog="chordhom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        _add_inputs(sub.add_parser(name, help=helptext, parents=[common]))
    s = sub.add_parser("search", help="exhaustive sweep over chord diagrams", parents=[common])
    s.add_argument("--task", choices=TASKS, required=True)
    s.add_argument("--max-chords", type=int, required=True)
    s.add_argument("--min-chords", type=int, default=0)
    s.add_argument("--bipartite-only", action="store_true")
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--shard", type=int, default=None, help="run only this shard index")
    s.add_argument("--json", metavar="OUT", help="write the report JSON here")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        if args.command == "search":
            if args.max_chords < 0 or args.shards < 1:
                raise UsageError("--max-chords must be >= 0 and --shards >= 1")
            return cmd_search(args)
        src = resolve_source(args)
        lines, record = COMMANDS[args.command][0](src, args)
        validate_result(record)
        if args.json:
            print(dump_result(record))
        else:
            print("\n".join(lines))
        return 0
    except UsageError as exc:
        print(f"chordhom: usage error: {exc}", file=sys.stderr)
        return 2
    except (ChordhomError, ValueError, IndexError, OSError) as exc:
        print(f"chordhom: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
