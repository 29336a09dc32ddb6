"""Named fixtures shipped with the package (``chordhom/fixtures/``)."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .chordio import parse_pd, read_dow_file
from .chords import ChordDiagram
from .complexes import SimplicialComplex
from .graphs import Graph
from .khovanov import LinkDiagram

FIXTURE_DIR = Path(str(resources.files("chordhom") / "fixtures"))

GRAPH_ALIASES = {"dprime": "star4+tree13", "d_prime": "star4+tree13"}


def names() -> list[str]:
    return sorted(p.name for p in FIXTURE_DIR.iterdir() if p.is_file())


def _path(name: str, suffix: str) -> Path:
    name = GRAPH_ALIASES.get(name, name)
    p = FIXTURE_DIR / name
    if p.suffix != suffix:
        p = FIXTURE_DIR / (name + suffix)
    if not p.exists():
        raise FileNotFoundError(f"no fixture named {name!r} (have: {', '.join(names())})")
    return p


def load_graph(name: str) -> Graph:
    data = json.loads(_path(name, ".json").read_text())
    labels = data["labels"]
    index = {lab: i for i, lab in enumerate(labels)}
    return Graph.from_edges(len(labels), [(index[u], index[v]) for u, v in data["edges"]], labels)


def graph_metadata(name: str) -> dict:
    return json.loads(_path(name, ".json").read_text())


def load_complex(name: str) -> SimplicialComplex:
    data = json.loads(_path(name, ".json").read_text())
    return SimplicialComplex(data["n_vertices"], tuple(tuple(f) for f in data["facets"]))


def load_dow(name: str) -> ChordDiagram:
    return read_dow_file(_path(name, ".dow"))[0]


def load_pd(name: str) -> LinkDiagram:
    return parse_pd(_path(name, ".pd").read_text())


def is_graph_fixture(name: str) -> bool:
    try:
        return "edges" in graph_metadata(name)
    except FileNotFoundError:
        return False
