#!/usr/bin/env python3
"""Two convention checks behind design choices in the package.

1. Side convention. For each brick M, compare the join-irreducible
   permutation phi(Filt(Gen M)) with the permutation whose only descent is
   sigma(M), and with the one whose only descent is the mirror of sigma(M).
2. Closure in the transport identity. Count generating sets S for which
   inv(closure(S)) differs from the transitive closure of inv(S), with
   closure taken as extension closure and as torsion closure.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from itertools import combinations

from torslat.arcs import mirror, sigma
from torslat.iso import phi
from torslat.strings import enumerate_indecomposables
from torslat.torsion import filt, filt_gen, inversion_set, torsion_closure
from torslat.weak import arc_permutation, transitive_closure


@dataclass
class Config:
    max_rank: int = 4
    transport_rank: int = 3


def side_convention(n: int) -> tuple[int, int, int]:
    literal = mirrored = 0
    ms = enumerate_indecomposables(n)
    for m in ms:
        w = phi(filt_gen(m))
        literal += w == arc_permutation(sigma(m), n)
        mirrored += w == arc_permutation(mirror(sigma(m)), n)
    return len(ms), literal, mirrored


def transport(n: int) -> tuple[int, int, int]:
    ms = enumerate_indecomposables(n)
    total = bad_filt = bad_tors = 0
    for r in range(len(ms) + 1):
        for S in combinations(ms, r):
            want = transitive_closure(inversion_set(S))
            total += 1
            bad_filt += inversion_set(filt(n, S)) != want
            bad_tors += inversion_set(torsion_closure(n, S).modules) != want
    return total, bad_filt, bad_tors


def main() -> None:
    ap = argparse.ArgumentParser(description="Side convention and transport checks.")
    ap.add_argument("--max-rank", type=int, default=Config.max_rank)
    ap.add_argument("--transport-rank", type=int, default=Config.transport_rank)
    cfg = Config(**vars(ap.parse_args()))
    print("n  bricks  sigma-agrees  mirror-agrees")
    for n in range(1, cfg.max_rank + 1):
        total, lit, mir = side_convention(n)
        print(f"{n:<2} {total:>6}  {lit:>12}  {mir:>13}")
    print("\nn  subsets  filt-differs  torsion-closure-differs")
    for n in range(1, cfg.transport_rank + 1):
        total, bf, bt = transport(n)
        print(f"{n:<2} {total:>7}  {bf:>12}  {bt:>23}")


if __name__ == "__main__":
    main()
