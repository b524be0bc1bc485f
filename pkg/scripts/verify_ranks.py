#!/usr/bin/env python3
"""Verify the isomorphism with the weak order rank by rank, with timings.

    python3 scripts/verify_ranks.py --max-rank 5 --out results/verify.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from torslat.arcs import arc_complex, maximal_faces
from torslat.iso import tors_lattice, verify_isomorphism
from torslat.strings import count_indecomposables


@dataclass
class Config:
    min_rank: int = 1
    max_rank: int = 5
    out: str | None = None


@dataclass
class Row:
    n: int
    indecomposables: int
    classes: int
    covers: int
    join_irreducibles: int
    arc_faces: int
    arc_facets: int
    ok: bool
    seconds: float


def run(cfg: Config) -> list[Row]:
    rows = []
    for n in range(cfg.min_rank, cfg.max_rank + 1):
        start = time.perf_counter()
        rep = verify_isomorphism(n)
        took = time.perf_counter() - start
        L = tors_lattice(n).lattice
        rows.append(Row(n, count_indecomposables(n), len(L), len(L.covers()), len(L.join_irreducibles()),
                        len(arc_complex(n)), len(maximal_faces(n)), rep.ok, round(took, 3)))
        for msg in rep.failures[:5]:
            print(f"  n={n}: {msg}")
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-rank", type=int, default=Config.min_rank)
    ap.add_argument("--max-rank", type=int, default=Config.max_rank)
    ap.add_argument("--out")
    cfg = Config(**vars(ap.parse_args()))
    rows = run(cfg)
    header = f"{'n':>2} {'ind':>4} {'tors':>5} {'covers':>6} {'JI':>4} {'faces':>6} {'facets':>6} {'ok':>5} {'sec':>7}"
    print(header)
    for r in rows:
        print(f"{r.n:>2} {r.indecomposables:>4} {r.classes:>5} {r.covers:>6} {r.join_irreducibles:>4} "
              f"{r.arc_faces:>6} {r.arc_facets:>6} {str(r.ok):>5} {r.seconds:>7.3f}")
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text(json.dumps({"config": asdict(cfg), "rows": [asdict(r) for r in rows]}, indent=2))


if __name__ == "__main__":
    main()
