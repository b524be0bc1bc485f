#!/usr/bin/env python3
"""Write DOT and SVG renderings of the small cases to a directory.

Produces the labelled torsion lattice and weak order at rank n as DOT, the
arc diagram of every permutation of 0..n as one SVG sheet, and the maximal
noncrossing diagrams as another.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from torslat.arcs import ArcDiagram, maximal_faces, render_gallery, render_svg
from torslat.iso import phi, tors_lattice
from torslat.weak import all_permutations, build_weak_order, delta, perm_str


@dataclass
class Config:
    n: int = 2
    out_dir: str = "figures"


def run(cfg: Config) -> list[Path]:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    TL = tors_lattice(cfg.n)
    images = {k: perm_str(phi(T)) for k, T in enumerate(TL.classes)}
    written = {
        f"tors_{cfg.n}.dot": TL.lattice.to_dot("tors", node_label=lambda k: f"{k}: {images[k]}", labels=True),
        f"weak_{cfg.n}.dot": build_weak_order(cfg.n).to_dot("weak", node_label=perm_str),
        f"diagrams_{cfg.n}.svg": render_gallery([delta(w) for w in all_permutations(cfg.n)]),
        f"facets_{cfg.n}.svg": render_gallery([ArcDiagram(cfg.n, f) for f in maximal_faces(cfg.n)]),
    }
    top = all_permutations(cfg.n)[-1]
    written[f"delta_{perm_str(top)}.svg"] = render_svg(delta(top))
    paths = []
    for name, text in written.items():
        path = out / name
        path.write_text(text)
        paths.append(path)
    return paths


def main() -> None:
    ap = argparse.ArgumentParser(description="Render lattices and arc diagrams.")
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--out-dir", default=Config.out_dir)
    for path in run(Config(**vars(ap.parse_args()))):
        print(path)


if __name__ == "__main__":
    main()
