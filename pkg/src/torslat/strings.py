"""Indecomposable modules over RA_n as oriented interval strings.

The quiver has vertices 1..n and, for each edge i (joining i and i+1), a
raising arrow a_i: i -> i+1 and a lowering arrow a_i*: i+1 -> i. All
two-cycles vanish, so an indecomposable is an interval [p, q] together with
one orientation per edge: ``R`` if a_i acts, ``L`` if a_i* acts. Every vertex
space is one-dimensional on the support.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .errors import InvalidRank, OutOfSupport, OverlappingSupports, RankMismatch
from .linalg import nullspace

RIGHT = "R"
LEFT = "L"


@dataclass(frozen=True)
class StringModule:
    n: int
    p: int
    q: int
    word: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise InvalidRank(f"rank must be >= 1, got {self.n}")
        if not 1 <= self.p <= self.q <= self.n:
            raise ValueError(f"support [{self.p},{self.q}] not inside [1,{self.n}]")
        if len(self.word) != self.q - self.p:
            raise ValueError(f"word {self.word!r} has wrong length for [{self.p},{self.q}]")
        if set(self.word) - {RIGHT, LEFT}:
            raise ValueError(f"word {self.word!r} must use only R and L")

    @property
    def support(self) -> tuple[int, int]:
        return self.p, self.q

    @property
    def dim(self) -> int:
        return self.q - self.p + 1

    @property
    def is_simple(self) -> bool:
        return self.p == self.q

    def edge(self, i: int) -> str:
        """Orientation on edge i, for p <= i < q."""
        if not self.p <= i < self.q:
            raise OutOfSupport(f"edge {i} not inside support [{self.p},{self.q}]")
        return self.word[i - self.p]

    @cached_property
    def right_edges(self) -> frozenset[int]:
        """Indices i with a_i acting nontrivially."""
        return frozenset(self.p + k for k, c in enumerate(self.word) if c == RIGHT)

    @cached_property
    def left_edges(self) -> frozenset[int]:
        """Indices i with a_i* acting nontrivially."""
        return frozenset(self.p + k for k, c in enumerate(self.word) if c == LEFT)

    @property
    def mask(self) -> int:
        # first edge is the most significant bit, R = 1
        return sum(1 << (len(self.word) - 1 - k) for k, c in enumerate(self.word) if c == RIGHT)

    @property
    def key(self) -> tuple[int, int, int]:
        return self.p, self.q, self.mask

    def __lt__(self, other: StringModule) -> bool:
        return self.key < other.key

    def arrows(self) -> set[tuple[int, int]]:
        """Arrows (source, target) acting nontrivially."""
        out = set()
        for k, c in enumerate(self.word):
            i = self.p + k
            out.add((i, i + 1) if c == RIGHT else (i + 1, i))
        return out

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "word": self.word}

    @classmethod
    def from_json(cls, n: int, data: dict | str) -> StringModule:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(n, int(data["p"]), int(data["q"]), str(data.get("word", "")))

    def __str__(self) -> str:
        if self.is_simple:
            return f"S{self.p}"
        return f"M[{self.p}-{self.q}:{self.word}]"


def simple(n: int, i: int) -> StringModule:
    return StringModule(n, i, i, "")


def enumerate_indecomposables(n: int) -> list[StringModule]:
    """One module per isoclass, sorted by (p, q, word as binary with R=1)."""
    if n < 1:
        raise InvalidRank(f"rank must be >= 1, got {n}")
    out = []
    for p in range(1, n + 1):
        for q in range(p, n + 1):
            k = q - p
            for m in range(2**k):
                word = "".join(RIGHT if (m >> (k - 1 - j)) & 1 else LEFT for j in range(k))
                out.append(StringModule(n, p, q, word))
    return out


def count_indecomposables(n: int) -> int:
    return sum((n - l + 1) * 2 ** (l - 1) for l in range(1, n + 1))


def substring(m: StringModule, s: int, t: int) -> StringModule:
    if not m.p <= s <= t <= m.q:
        raise OutOfSupport(f"[{s},{t}] not inside support [{m.p},{m.q}] of {m}")
    return StringModule(m.n, s, t, m.word[s - m.p : t - m.p])


def is_factor_interval(m: StringModule, s: int, t: int) -> bool:
    """[s, t] spans a predecessor-closed substring of m (an indecomposable quotient)."""
    return (s == m.p or m.edge(s - 1) == LEFT) and (t == m.q or m.edge(t) == RIGHT)


def is_sub_interval(m: StringModule, s: int, t: int) -> bool:
    """[s, t] spans a successor-closed substring of m (an indecomposable submodule)."""
    return (s == m.p or m.edge(s - 1) == RIGHT) and (t == m.q or m.edge(t) == LEFT)


def _intervals(p: int, q: int):
    for s in range(p, q + 1):
        for t in range(s, q + 1):
            yield s, t


def indecomposable_factors(m: StringModule) -> frozenset[StringModule]:
    """Indecomposable quotients of m, m itself included."""
    return frozenset(substring(m, s, t) for s, t in _intervals(m.p, m.q) if is_factor_interval(m, s, t))


def indecomposable_submodules(m: StringModule) -> frozenset[StringModule]:
    return frozenset(substring(m, s, t) for s, t in _intervals(m.p, m.q) if is_sub_interval(m, s, t))


def _check_rank(a: StringModule, b: StringModule) -> None:
    if a.n != b.n:
        raise RankMismatch(f"{a} has rank {a.n}, {b} has rank {b.n}")


def hom_dim(m: StringModule, m2: StringModule) -> int:
    """dim Hom(m, m2) by counting common substrings.

    A basis map exists for each interval that is a quotient of m and a
    submodule of m2 with matching orientation.
    """
    _check_rank(m, m2)
    lo, hi = max(m.p, m2.p), min(m.q, m2.q)
    count = 0
    for s, t in _intervals(lo, hi):
        if m.word[s - m.p : t - m.p] != m2.word[s - m2.p : t - m2.p]:
            continue
        if is_factor_interval(m, s, t) and is_sub_interval(m2, s, t):
            count += 1
    return count


def _arrow_acts(m: StringModule, src: int, dst: int) -> int:
    lo = min(src, dst)
    if not (m.p <= lo and lo + 1 <= m.q):
        return 0
    want = RIGHT if dst == src + 1 else LEFT
    return 1 if m.edge(lo) == want else 0


def hom_space_basis(m: StringModule, m2: StringModule) -> tuple[list[int], list[list[Fraction]]]:
    """Basis of Hom(m, m2) as scalars (f_i) on the common support.

    Solves f_y * m(a) = m2(a) * f_x for every arrow a: x -> y of the quiver.
    Returns the vertex list indexing the coordinates and the kernel basis.
    """
    _check_rank(m, m2)
    verts = [i for i in range(1, m.n + 1) if m.p <= i <= m.q and m2.p <= i <= m2.q]
    col = {v: k for k, v in enumerate(verts)}
    rows = []
    for i in range(1, m.n):
        for x, y in ((i, i + 1), (i + 1, i)):
            row = [0] * len(verts)
            if y in col:
                row[col[y]] += _arrow_acts(m, x, y)
            if x in col:
                row[col[x]] -= _arrow_acts(m2, x, y)
            if any(row):
                rows.append(row)
    return verts, nullspace(rows, len(verts))


def hom_dim_oracle(m: StringModule, m2: StringModule) -> int:
    return len(hom_space_basis(m, m2)[1])


def is_brick(m: StringModule) -> bool:
    return hom_dim(m, m) == 1


def glue(sub: StringModule, quot: StringModule) -> StringModule | None:
    """The indecomposable nonsplit extension 0 -> sub -> E -> quot -> 0.

    Defined when the supports are adjacent; the connecting arrow points into
    ``sub`` so that sub is successor-closed in E.
    """
    _check_rank(sub, quot)
    if sub.p <= quot.q and quot.p <= sub.q:
        raise OverlappingSupports(f"{sub} and {quot} overlap")
    if sub.q + 1 == quot.p:
        return StringModule(sub.n, sub.p, quot.q, sub.word + LEFT + quot.word)
    if quot.q + 1 == sub.p:
        return StringModule(sub.n, quot.p, sub.q, quot.word + RIGHT + sub.word)
    return None


def complement_pieces(x: StringModule, m: StringModule) -> list[StringModule]:
    """Substrings of x left over after removing the substring with m's support."""
    pieces = []
    if x.p < m.p:
        pieces.append(substring(x, x.p, m.p - 1))
    if m.q < x.q:
        pieces.append(substring(x, m.q + 1, x.q))
    return pieces


def contains_substring(x: StringModule, m: StringModule) -> bool:
    return x.p <= m.p and m.q <= x.q and substring(x, m.p, m.q) == m


def dualize(m: StringModule) -> StringModule:
    """Vector-space dual, read back over RA_n via RA_n^op = RA_n (swap R and L)."""
    flipped = m.word.translate(str.maketrans("RL", "LR"))
    return StringModule(m.n, m.p, m.q, flipped)


def inv_pair(m: StringModule) -> tuple[int, int]:
    return m.p - 1, m.q


def parse_module(n: int, text: str) -> StringModule:
    """Parse ``S3``, ``1-3:RL``, ``M[1-3:RL]`` or module JSON."""
    text = text.strip()
    if text.startswith("{"):
        return StringModule.from_json(n, text)
    if text.startswith("S") and text[1:].isdigit():
        return simple(n, int(text[1:]))
    body = text[2:-1] if text.startswith("M[") and text.endswith("]") else text
    span, _, word = body.partition(":")
    p, _, q = span.partition("-")
    return StringModule(n, int(p), int(q or p), word)


def sorted_modules(ms: Iterable[StringModule]) -> list[StringModule]:
    return sorted(ms, key=lambda m: m.key)
