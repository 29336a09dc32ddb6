"""Text formats: double-occurrence words, PD codes, and the JSON result record."""

from __future__ import annotations

import json
import re
from collections import Counter
from pathlib import Path
from typing import Optional

from .chords import ChordDiagram
from .complexes import HomologyResult
from .errors import LabelCountError, PDSyntaxError
from .khovanov import LinkDiagram


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_dow(text: str) -> ChordDiagram:
    """Whitespace-separated labels read clockwise; each label must occur exactly twice.

    The empty word is the diagram with no chords.
    """
    tokens = text.split()
    counts = Counter(tokens)
    bad = sorted(t for t, c in counts.items() if c != 2)
    if bad:
        raise LabelCountError(f"labels {bad} do not occur exactly twice")
    return ChordDiagram.from_word(tokens)


def emit_dow(d: ChordDiagram) -> str:
    """Canonical labels 1..n in order of first endpoint."""
    return " ".join(map(str, d.word()))


_PD_TOKEN = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_pd(text: str) -> LinkDiagram:
    """``X(a,b,c,d)`` tuples separated by whitespace; ``#`` starts a comment.

    The empty text is the crossingless unknot.
    """
    body = " ".join(_strip_comment(line) for line in text.splitlines())
    crossings = []
    pos = 0
    while True:
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos == len(body):
            break
        m = _PD_TOKEN.match(body, pos)
        if m is None:
            raise PDSyntaxError(f"cannot parse PD text near {body[pos:pos + 20]!r}")
        crossings.append(tuple(int(x) for x in m.groups()))
        pos = m.end()
    if not crossings:
        return LinkDiagram((), free_loops=1)
    return LinkDiagram(tuple(crossings))


def emit_pd(d: LinkDiagram) -> str:
    return d.pd_text()


def read_dow_file(path) -> list[ChordDiagram]:
    """One word per line; blank and comment-only lines are skipped."""
    out = []
    for line in Path(path).read_text().splitlines():
        body = _strip_comment(line)
        if body.strip():
            out.append(parse_dow(body))
    return out


def read_pd_file(path) -> LinkDiagram:
    return parse_pd(Path(path).read_text())


def result_record(
    source: str,
    homology: HomologyResult,
    jmin: Optional[int] = None,
    certificate: Optional[str] = None,
) -> dict:
    return {
        "input": source,
        "jmin": jmin,
        "homology": homology.to_json(),
        "certificate": certificate,
    }


def dump_result(record: dict) -> str:
    return json.dumps(record, indent=2, sort_keys=True)


def validate_result(record: dict) -> None:
    """Raise ValueError unless ``record`` matches the result schema."""
    if set(record) != {"input", "jmin", "homology", "certificate"}:
        raise ValueError(f"unexpected result fields {sorted(record)}")
    if not isinstance(record["input"], str):
        raise ValueError("input must be a string")
    if record["jmin"] is not None and not isinstance(record["jmin"], int):
        raise ValueError("jmin must be an integer or null")
    if record["certificate"] is not None and not isinstance(record["certificate"], str):
        raise ValueError("certificate must be a string or null")
    if not isinstance(record["homology"], list):
        raise ValueError("homology must be an array")
    for row in record["homology"]:
        if set(row) != {"degree", "rank", "torsion"}:
            raise ValueError(f"bad homology row {row}")
        if not isinstance(row["degree"], int) or not isinstance(row["rank"], int) or row["rank"] < 0:
            raise ValueError(f"bad homology row {row}")
        if not isinstance(row["torsion"], list) or any(not isinstance(t, int) or t < 2 for t in row["torsion"]):
            raise ValueError(f"bad torsion in {row}")
