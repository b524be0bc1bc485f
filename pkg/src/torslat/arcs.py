"""Arcs on the nodes 0..n and noncrossing arc diagrams.

An arc runs monotonically up from its bottom node b to its top node t and
passes each node strictly between them on the left (``L``) or right (``R``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Iterator

from .errors import BudgetExceeded, TorslatError, budget
from .strings import StringModule, enumerate_indecomposables


class SameArc(TorslatError, ValueError):
    pass


class NotOverlapping(TorslatError, ValueError):
    pass


class IncompatibleArcs(TorslatError, ValueError):
    pass


@dataclass(frozen=True, order=True)
class Arc:
    b: int
    t: int
    sides: str = ""

    def __post_init__(self):
        if not 0 <= self.b < self.t:
            raise ValueError(f"need 0 <= b < t, got b={self.b}, t={self.t}")
        if len(self.sides) != self.t - self.b - 1 or set(self.sides) - {"L", "R"}:
            raise ValueError(f"sides {self.sides!r} must give L/R for each node in ({self.b},{self.t})")

    def side(self, k: int) -> str | None:
        """Side passed at node k, or None if k is not an interior node."""
        if self.b < k < self.t:
            return self.sides[k - self.b - 1]
        return None

    @property
    def left(self) -> frozenset[int]:
        return frozenset(k for k in self.interior if self.side(k) == "L")

    @property
    def right(self) -> frozenset[int]:
        return frozenset(k for k in self.interior if self.side(k) == "R")

    @property
    def support(self) -> range:
        return range(self.b, self.t + 1)

    @property
    def interior(self) -> range:
        return range(self.b + 1, self.t)

    def to_json(self) -> dict:
        return {"b": self.b, "t": self.t, "sides": {str(k): self.side(k) for k in self.interior}}

    @classmethod
    def from_json(cls, data: dict | str) -> Arc:
        if isinstance(data, str):
            data = json.loads(data)
        b, t = int(data["b"]), int(data["t"])
        sides = data.get("sides", {})
        return cls(b, t, "".join(sides[str(k)] for k in range(b + 1, t)))

    def __str__(self) -> str:
        return f"arc({self.b},{self.t}{':' + self.sides if self.sides else ''})"


def sigma(m: StringModule) -> Arc:
    """Module on [p, q] to the arc from p-1 to q; L/R at node i copies the orientation of edge i."""
    return Arc(m.p - 1, m.q, m.word)


def sigma_inv(a: Arc, n: int) -> StringModule:
    return StringModule(n, a.b + 1, a.t, a.sides)


def mirror(a: Arc) -> Arc:
    return Arc(a.b, a.t, a.sides.translate(str.maketrans("LR", "RL")))


def enumerate_arcs(n: int) -> list[Arc]:
    return [sigma(m) for m in enumerate_indecomposables(n)]


def restrict(a: Arc, lo: int, hi: int) -> Arc:
    """The subarc of a with endpoints lo < hi inside its support."""
    if not a.b <= lo < hi <= a.t:
        raise ValueError(f"[{lo},{hi}] is not inside the support of {a}")
    return Arc(lo, hi, a.sides[lo - a.b : hi - a.b - 1])


def is_subarc(beta: Arc, alpha: Arc) -> bool:
    if not (alpha.b <= beta.b and beta.t <= alpha.t):
        return False
    return all(alpha.side(k) == beta.side(k) for k in beta.interior)


def is_pred_closed_subarc(beta: Arc, alpha: Arc) -> bool:
    return is_subarc(beta, alpha) and alpha.side(beta.b) != "R" and alpha.side(beta.t) != "L"


def is_succ_closed_subarc(beta: Arc, alpha: Arc) -> bool:
    return is_subarc(beta, alpha) and alpha.side(beta.b) != "L" and alpha.side(beta.t) != "R"


def _common_subarcs(alpha: Arc, alpha2: Arc) -> Iterator[Arc]:
    lo, hi = max(alpha.b, alpha2.b), min(alpha.t, alpha2.t)
    for b in range(lo, hi):
        for t in range(b + 1, hi + 1):
            beta = restrict(alpha, b, t)
            if is_subarc(beta, alpha2):
                yield beta


def hom_count_via_arcs(alpha: Arc, alpha2: Arc) -> int:
    """Number of predecessor-closed subarcs of alpha that are successor-closed subarcs of alpha2."""
    return sum(
        1 for beta in _common_subarcs(alpha, alpha2)
        if is_pred_closed_subarc(beta, alpha) and is_succ_closed_subarc(beta, alpha2)
    )


def compatible(alpha: Arc, alpha2: Arc) -> bool:
    """No arc is predecessor-closed in one and successor-closed in the other."""
    if alpha == alpha2:
        raise SameArc(f"{alpha} compared with itself")
    return hom_count_via_arcs(alpha, alpha2) == 0 and hom_count_via_arcs(alpha2, alpha) == 0


def overlap(alpha: Arc, alpha2: Arc) -> bool:
    a_in, b_in = set(alpha.interior), set(alpha2.interior)
    return bool((set(alpha.support) & b_in) | (set(alpha2.support) & a_in))


def left_of(alpha: Arc, alpha2: Arc) -> bool:
    if not overlap(alpha, alpha2):
        raise NotOverlapping(f"{alpha} and {alpha2} do not overlap")
    inner2 = set(alpha2.interior)
    first = (alpha.right | {alpha.t, alpha.b}) & inner2 <= alpha2.right
    second = {alpha2.t, alpha2.b} & set(alpha.interior) <= alpha.left
    return first and second


def shares_endpoint(alpha: Arc, alpha2: Arc) -> bool:
    return alpha.b == alpha2.b or alpha.t == alpha2.t


@dataclass(frozen=True)
class ArcDiagram:
    n: int
    arcs: frozenset[Arc] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for a in self.arcs:
            if a.t > self.n:
                raise ValueError(f"{a} does not fit on {self.n + 1} nodes")
        ordered = sorted(self.arcs)
        for i, a in enumerate(ordered):
            for c in ordered[i + 1:]:
                if not compatible(a, c):
                    raise IncompatibleArcs(f"{a} and {c} are not compatible")

    def __iter__(self):
        return iter(sorted(self.arcs))

    def __len__(self) -> int:
        return len(self.arcs)

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [a.to_json() for a in sorted(self.arcs)]}

    @classmethod
    def from_json(cls, data: dict | str) -> ArcDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), frozenset(Arc.from_json(a) for a in data["arcs"]))


def compatibility_graph(n: int) -> tuple[list[Arc], list[set[int]]]:
    arcs = enumerate_arcs(n)
    nbrs: list[set[int]] = [set() for _ in arcs]
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if compatible(arcs[i], arcs[j]):
                nbrs[i].add(j)
                nbrs[j].add(i)
    return arcs, nbrs


def maximal_faces(n: int) -> list[frozenset[Arc]]:
    """Facets of the arc complex: Bron-Kerbosch with pivoting on the compatibility graph."""
    arcs, nbrs = compatibility_graph(n)
    out: list[frozenset[Arc]] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(frozenset(arcs[i] for i in r))
            return
        pivot = max(sorted(p | x), key=lambda u: len(nbrs[u] & p))
        for v in sorted(p - nbrs[pivot]):
            expand(r + [v], p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand([], set(range(len(arcs))), set())
    return sorted(out, key=lambda f: sorted(f))


def arc_complex(n: int, max_faces: int | None = None) -> set[frozenset[Arc]]:
    """Every set of pairwise compatible arcs, the empty face included.

    Pairwise compatibility suffices because the complex is flag.
    """
    cap = budget(10**6) if max_faces is None else max_faces
    arcs, nbrs = compatibility_graph(n)
    faces: set[frozenset[Arc]] = set()

    def grow(face: list[int], cand: list[int]) -> None:
        if len(faces) >= cap:
            raise BudgetExceeded(f"more than {cap} faces in the arc complex at n={n}")
        faces.add(frozenset(arcs[i] for i in face))
        for k, v in enumerate(cand):
            grow(face + [v], [u for u in cand[k + 1:] if u in nbrs[v]])

    grow([], list(range(len(arcs))))
    return faces


# rendering

_STEP = 60
_MARGIN = 40
_OFFSET = 14
_GAP = 10


def _node_y(n: int, k: int) -> float:
    return _MARGIN + (n - k) * _STEP


def _center(n: int) -> float:
    return _MARGIN + _OFFSET + _GAP * max(n, 1)


def _side_offsets(d: ArcDiagram) -> dict[tuple[Arc, int], float]:
    """Horizontal offset of each arc beside each interior node.

    Arcs passing on the same side of a node are nested; the one nearer the
    node is the innermost in the left-of order.
    """
    def order(a: Arc, c: Arc) -> int:
        if left_of(a, c):
            return -1
        if left_of(c, a):
            return 1
        return (a > c) - (a < c)

    offsets = {}
    for k in range(d.n + 1):
        rights = sorted((a for a in d.arcs if a.side(k) == "R"), key=cmp_to_key(order))
        lefts = sorted((a for a in d.arcs if a.side(k) == "L"), key=cmp_to_key(order), reverse=True)
        for depth, a in enumerate(rights):
            offsets[(a, k)] = _OFFSET + depth * _GAP
        for depth, a in enumerate(lefts):
            offsets[(a, k)] = -(_OFFSET + depth * _GAP)
    return offsets


def _path(points: list[tuple[float, float]]) -> str:
    """Smooth monotone path through the points (Catmull-Rom as cubic Beziers)."""
    parts = [f"M {points[0][0]:.2f} {points[0][1]:.2f}"]
    for i in range(len(points) - 1):
        p0 = points[max(i - 1, 0)]
        p1, p2 = points[i], points[i + 1]
        p3 = points[min(i + 2, len(points) - 1)]
        c1 = (p1[0] + (p2[0] - p0[0]) / 6, p1[1] + (p2[1] - p0[1]) / 6)
        c2 = (p2[0] - (p3[0] - p1[0]) / 6, p2[1] - (p3[1] - p1[1]) / 6)
        parts.append(f"C {c1[0]:.2f} {c1[1]:.2f} {c2[0]:.2f} {c2[1]:.2f} {p2[0]:.2f} {p2[1]:.2f}")
    return " ".join(parts)


def arc_points(d: ArcDiagram) -> dict[Arc, list[tuple[float, float]]]:
    """Control points for each arc: its endpoints and one point beside each interior node."""
    cx = _center(d.n)
    offsets = _side_offsets(d)
    pts = {}
    for a in sorted(d.arcs):
        row = [(cx, _node_y(d.n, a.b))]
        row += [(cx + offsets[(a, k)], _node_y(d.n, k)) for k in a.interior]
        row.append((cx, _node_y(d.n, a.t)))
        pts[a] = row
    return pts


def _svg_body(d: ArcDiagram, indent: str = "  ") -> list[str]:
    cx = _center(d.n)
    out = []
    for a, pts in arc_points(d).items():
        out.append(f'{indent}<path d="{_path(pts)}" fill="none" stroke="black" stroke-width="2"><title>{a}</title></path>')
    for k in range(d.n + 1):
        y = _node_y(d.n, k)
        out.append(f'{indent}<circle cx="{cx}" cy="{y}" r="4" fill="black"/>')
        out.append(f'{indent}<text x="{_MARGIN / 2}" y="{y + 4}" font-family="sans-serif" font-size="12">{k}</text>')
    return out


def _svg_open(width: float, height: float) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]


def render_svg(d: ArcDiagram) -> str:
    width, height = 2 * _center(d.n), 2 * _MARGIN + d.n * _STEP
    return "\n".join(_svg_open(width, height) + _svg_body(d) + ["</svg>"]) + "\n"


def render_gallery(diagrams: Iterable[ArcDiagram], per_row: int = 8) -> str:
    """Several diagrams on one sheet, left to right in rows."""
    diagrams = list(diagrams)
    if not diagrams:
        raise ValueError("nothing to render")
    n = max(d.n for d in diagrams)
    cell_w, cell_h = 2 * _center(n), 2 * _MARGIN + n * _STEP
    cols = min(per_row, len(diagrams))
    rows = -(-len(diagrams) // cols)
    out = _svg_open(cols * cell_w, rows * cell_h)
    for i, d in enumerate(diagrams):
        x, y = (i % cols) * cell_w, (i // cols) * cell_h
        out.append(f'  <g transform="translate({x} {y})">')
        out += _svg_body(d, "    ")
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
