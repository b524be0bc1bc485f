"""Weak order on permutations of {0, ..., n} and the descent-to-arc bijection.

Inversions are stored by value: (p, q) with p < q and q appearing before p.
"""

from __future__ import annotations

import json
from functools import cmp_to_key
from itertools import permutations
from typing import Iterable, Sequence

from .arcs import Arc, ArcDiagram
from .errors import BudgetExceeded, TorslatError, budget
from .lattice import FiniteLattice

Perm = tuple[int, ...]
Pairs = frozenset[tuple[int, int]]


class ClosureNotRealizable(TorslatError, RuntimeError):
    pass


class NotInImage(TorslatError, ValueError):
    pass


def perm(word: str | Sequence[int]) -> Perm:
    """Permutation from one-line notation: ``"210"``, ``"2,1,0"`` or a sequence."""
    if isinstance(word, str):
        text = word.strip().strip("[]")
        w = tuple(int(c) for c in text.replace(" ", "").split(",")) if "," in text else tuple(int(c) for c in text)
    else:
        w = tuple(int(c) for c in word)
    if sorted(w) != list(range(len(w))):
        raise ValueError(f"{word!r} is not a permutation of 0..{len(w) - 1}")
    return w


def perm_str(w: Perm) -> str:
    return "".join(map(str, w)) if len(w) <= 10 else ",".join(map(str, w))


def inversions(w: Perm) -> Pairs:
    return frozenset((w[j], w[i]) for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def descents(w: Perm) -> list[tuple[int, int]]:
    """Descents as inversions (w_{i+1}, w_i)."""
    return [(w[i + 1], w[i]) for i in range(len(w) - 1) if w[i] > w[i + 1]]


def transitive_closure(pairs: Iterable[tuple[int, int]]) -> Pairs:
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        by_low: dict[int, set[int]] = {}
        for p, q in closed:
            by_low.setdefault(p, set()).add(q)
        for p, q in list(closed):
            for r in by_low.get(q, ()):
                if (p, r) not in closed:
                    closed.add((p, r))
                    changed = True
    return frozenset(closed)


def perm_from_inversions(inv: Iterable[tuple[int, int]], n: int) -> Perm | None:
    """The permutation of 0..n with this inversion set, or None if none exists."""
    inv = frozenset(inv)
    if any(not (0 <= p < q <= n) for p, q in inv):
        return None

    def cmp(a: int, b: int) -> int:
        if a == b:
            return 0
        lo, hi = min(a, b), max(a, b)
        before = hi if (lo, hi) in inv else lo
        return -1 if a == before else 1

    w = tuple(sorted(range(n + 1), key=cmp_to_key(cmp)))
    return w if inversions(w) == inv else None


def weak_covers_below(w: Perm) -> set[Perm]:
    out = set()
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            v = list(w)
            v[i], v[i + 1] = v[i + 1], v[i]
            out.add(tuple(v))
    return out


def weak_leq(u: Perm, w: Perm) -> bool:
    return inversions(u) <= inversions(w)


def weak_join(U: Iterable[Perm], n: int | None = None) -> Perm:
    U = list(U)
    if n is None:
        if not U:
            raise ValueError("n is required to join an empty set")
        n = len(U[0]) - 1
    closure = transitive_closure(pair for u in U for pair in inversions(u))
    w = perm_from_inversions(closure, n)
    if w is None:
        raise ClosureNotRealizable(f"transitive closure of inversions of {U} is not an inversion set")
    return w


def delta(w: Perm) -> ArcDiagram:
    """One arc per descent w_i > w_{i+1}: nodes strictly between them that
    appear earlier in w lie to the left of the arc, later ones to the right."""
    arcs = []
    for i in range(len(w) - 1):
        t, b = w[i], w[i + 1]
        if t < b:
            continue
        sides = {}
        for j, v in enumerate(w):
            if b < v < t:
                sides[v] = "L" if j < i else "R"
        arcs.append(Arc(b, t, "".join(sides[k] for k in range(b + 1, t))))
    return ArcDiagram(len(w) - 1, frozenset(arcs))


def arc_permutation(a: Arc, n: int) -> Perm:
    """The join-irreducible permutation whose single descent gives the arc a."""
    if a.t > n:
        raise ValueError(f"{a} does not fit on {n + 1} nodes")
    head = sorted([v for v in range(a.b)] + list(a.left))
    tail = sorted(list(a.right) + [v for v in range(a.t + 1, n + 1)])
    return tuple(head + [a.t, a.b] + tail)


def delta_inv(d: ArcDiagram) -> Perm:
    w = weak_join((arc_permutation(a, d.n) for a in d.arcs), d.n)
    if delta(w) != d:
        raise NotInImage(f"no permutation maps to {d.to_json()}")
    return w


def all_permutations(n: int) -> list[Perm]:
    return sorted(permutations(range(n + 1)), key=lambda w: (len(inversions(w)), w))


def build_weak_order(n: int, max_elements: int | None = None) -> FiniteLattice:
    cap = budget() if max_elements is None else max_elements
    count = 1
    for k in range(2, n + 2):
        count *= k
    if count > cap:
        raise BudgetExceeded(f"{count} permutations exceed the element cap {cap}")
    ws = all_permutations(n)
    covers = [(v, w) for w in ws for v in sorted(weak_covers_below(w))]
    return FiniteLattice(ws, covers)


def perm_json(w: Perm) -> str:
    return json.dumps(list(w))
