"""Run the three exhaustive sweeps and write one JSON report per task.

    python scripts/run_sweep.py --max-chords 6 --out sweeps/
    python scripts/run_sweep.py --max-chords 7 --threads 8 --tasks torsion
"""

from __future__ import annotations

import argparse
import logging
import os
import time
from dataclasses import dataclass, field
from pathlib import Path

from chordhom.search import TASKS, run_search


@dataclass
class SweepConfig:
    max_chords: int = 6
    tasks: tuple[str, ...] = TASKS
    shards: int = 1
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    torsion_bipartite_only: bool = False
    out: Path = Path("sweeps")


def parse_args() -> SweepConfig:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--max-chords", type=int, default=6)
    p.add_argument("--tasks", nargs="+", choices=TASKS, default=list(TASKS))
    p.add_argument("--shards", type=int, default=None, help="default: one per thread")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--torsion-bipartite-only", action="store_true")
    p.add_argument("--out", type=Path, default=Path("sweeps"))
    a = p.parse_args()
    return SweepConfig(a.max_chords, tuple(a.tasks), a.shards or a.threads, a.threads,
                       a.torsion_bipartite_only, a.out)


def main(cfg: SweepConfig) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    for task in cfg.tasks:
        bip = cfg.torsion_bipartite_only if task == "torsion" else True
        t0 = time.perf_counter()
        rep = run_search(task, cfg.max_chords, bipartite_only=bip, shards=cfg.shards, threads=cfg.threads)
        dt = time.perf_counter() - t0
        path = cfg.out / f"{task}_n{cfg.max_chords}.json"
        path.write_text(rep.dumps() + "\n")
        c = rep.counters
        print(f"{task:8s} examined {c['examined']:>8d}  in scope {c['in_scope']:>8d}  "
              f"violations {rep.violations}  {dt:6.1f}s  -> {path}")
        print(f"         {rep.verdict()}")


if __name__ == "__main__":
    logging.basicConfig(level=logging.WARNING)
    main(parse_args())
