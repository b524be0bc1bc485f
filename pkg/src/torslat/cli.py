"""Command line entry point. Data goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 failed verification or exhausted budget, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import strings as sm
from .arcs import ArcDiagram, enumerate_arcs, maximal_faces, render_gallery, render_svg
from .errors import BudgetExceeded, TorslatError
from .iso import joinand_bricks, phi, phi_via_cjr, tors_lattice, verify_isomorphism, weak_order
from .weak import delta, perm, perm_str


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _rank(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"rank must be an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"rank must be at least 1, got {n}")
    return n


def cmd_ind(args) -> int:
    for m in sm.enumerate_indecomposables(args.n):
        _emit(m.to_json())
    return 0


def cmd_hom(args) -> int:
    try:
        a, b = sm.parse_module(args.n, args.m1), sm.parse_module(args.n, args.m2)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    _emit({"source": a.to_json(), "target": b.to_json(),
           "hom_dim": sm.hom_dim(a, b), "oracle": sm.hom_dim_oracle(a, b)})
    return 0


def cmd_lattice(args) -> int:
    TL = tors_lattice(args.n)
    if args.format == "dot":
        sys.stdout.write(TL.lattice.to_dot("tors", labels=args.labels))
    else:
        data = TL.to_json()
        if not args.labels:
            data["covers"] = [c[:2] for c in data["covers"]]
        _emit(data)
    return 0


def cmd_weak(args) -> int:
    W = weak_order(args.n)
    if args.format == "dot":
        sys.stdout.write(W.to_dot("weak", node_label=perm_str))
    else:
        _emit({"n": args.n, **W.to_json(element_json=list)})
    return 0


def cmd_cjc(args) -> int:
    TL = tors_lattice(args.n)
    L = TL.lattice
    faces = []
    for k, T in enumerate(TL.classes):
        rep = L.canonical_join_representation(k)
        faces.append((len(rep.joinands), k, sorted(rep.joinands), joinand_bricks(T, TL)))
    for size, k, joinands, bricks in sorted(faces):
        _emit({"class": k, "joinands": joinands, "bricks": [b.to_json() for b in bricks]})
    return 0


def cmd_arcs(args) -> int:
    if args.render:
        facets = [ArcDiagram(args.n, f) for f in maximal_faces(args.n)]
        Path(args.render).write_text(render_gallery(facets))
        print(f"wrote {len(facets)} maximal diagrams to {args.render}", file=sys.stderr)
        return 0
    if args.facets:
        for f in maximal_faces(args.n):
            _emit([a.to_json() for a in sorted(f)])
        return 0
    for a in enumerate_arcs(args.n):
        _emit(a.to_json())
    return 0


def cmd_delta(args) -> int:
    try:
        w = perm(args.perm)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    d = delta(w)
    if args.render:
        Path(args.render).write_text(render_svg(d))
        print(f"wrote {len(d)} arcs to {args.render}", file=sys.stderr)
    else:
        _emit(d.to_json())
    return 0


def cmd_phi(args) -> int:
    TL = tors_lattice(args.n)
    if not 0 <= args.class_id < len(TL):
        raise UsageError(f"class id must lie in [0, {len(TL) - 1}], got {args.class_id}")
    T = TL.classes[args.class_id]
    _emit({"class": args.class_id, "modules": T.to_json(),
           "phi": list(phi(T)), "phi_via_cjr": list(phi_via_cjr(T, TL))})
    return 0


def cmd_verify(args) -> int:
    rep = verify_isomorphism(args.n)
    _emit(rep.to_json())
    for msg in rep.failures:
        print(msg, file=sys.stderr)
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="torslat", description="Torsion classes of RA_n and the weak order.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ind", help="indecomposables as JSON lines")
    p.add_argument("n", type=_rank)
    p.set_defaults(func=cmd_ind)

    p = sub.add_parser("hom", help="hom dimension by formula and by linear algebra")
    p.add_argument("n", type=_rank)
    p.add_argument("m1", help='module such as "S2", "1-3:RL" or JSON')
    p.add_argument("m2")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("lattice", help="Hasse diagram of the torsion classes")
    p.add_argument("n", type=_rank)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--labels", action="store_true", help="include brick labels on covers")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("weak", help="weak order on permutations of 0..n")
    p.add_argument("n", type=_rank)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_weak)

    p = sub.add_parser("cjc", help="canonical join complex of the torsion lattice")
    p.add_argument("n", type=_rank)
    p.set_defaults(func=cmd_cjc)

    p = sub.add_parser("arcs", help="arcs on n+1 nodes")
    p.add_argument("n", type=_rank)
    p.add_argument("--facets", action="store_true", help="list maximal noncrossing diagrams instead")
    p.add_argument("--render", metavar="FILE.svg", help="draw every maximal diagram to an SVG file")
    p.set_defaults(func=cmd_arcs)

    p = sub.add_parser("delta", help="arc diagram of a permutation")
    p.add_argument("perm", help='one-line notation, e.g. "210" or "2,1,0"')
    p.add_argument("--render", metavar="FILE.svg")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("phi", help="permutation attached to a torsion class")
    p.add_argument("n", type=_rank)
    p.add_argument("--class", dest="class_id", type=int, required=True, help="breadth-first class id")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("verify", help="check the isomorphism with the weak order")
    p.add_argument("n", type=_rank)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"torslat {args.command}: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"torslat {args.command}: {exc}", file=sys.stderr)
        return 1
    except TorslatError as exc:
        print(f"torslat {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
