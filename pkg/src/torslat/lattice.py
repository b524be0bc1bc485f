"""Finite lattices given by their Hasse diagram.

Elements are arbitrary hashable ids. Internally they are re-indexed along a
linear extension so that up-sets and down-sets are integer bitmasks; the least
element of an up-set mask is then its lowest set bit and the greatest element
of a down-set mask its highest set bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Hashable, Iterable, Mapping, Sequence

from .errors import TorslatError

Id = Hashable


class LatticeError(TorslatError):
    pass


class CycleDetected(LatticeError):
    pass


class NotALattice(LatticeError):
    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class NonHasseEdge(LatticeError):
    def __init__(self, message: str, edge: tuple = ()):
        super().__init__(message)
        self.edge = edge


class MissingCJR(LatticeError):
    def __init__(self, element: Id):
        super().__init__(f"element {element!r} has no canonical join representation")
        self.element = element


@dataclass(frozen=True)
class JoinRepresentation:
    target: Id
    joinands: frozenset


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _highest(mask: int) -> int:
    return mask.bit_length() - 1


class FiniteLattice:
    """Immutable finite lattice with optional cover labels."""

    def __init__(self, elements: Sequence[Id], covers: Iterable[tuple[Id, Id]],
                 labels: Mapping[tuple[Id, Id], Any] | None = None):
        elements = list(elements)
        if not elements:
            raise NotALattice("a lattice needs at least one element")
        index = {}
        for e in elements:
            if e in index:
                raise ValueError(f"duplicate element id {e!r}")
            index[e] = len(index)
        covers = list(dict.fromkeys(covers))
        for lo, hi in covers:
            if lo not in index or hi not in index:
                raise ValueError(f"cover ({lo!r}, {hi!r}) references an unknown element")
            if lo == hi:
                raise CycleDetected(f"self-loop at {lo!r}")

        size = len(elements)
        ups: list[list[int]] = [[] for _ in range(size)]
        indeg = [0] * size
        for lo, hi in covers:
            ups[index[lo]].append(index[hi])
            indeg[index[hi]] += 1
        # Kahn, stable in input order
        order = []
        ready = [i for i in range(size) if indeg[i] == 0]
        ready.reverse()
        while ready:
            i = ready.pop()
            order.append(i)
            fresh = []
            for j in ups[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    fresh.append(j)
            ready.extend(reversed(fresh))
        if len(order) != size:
            stuck = [elements[i] for i in range(size) if indeg[i] > 0]
            raise CycleDetected(f"cover relation has a cycle through {stuck[:5]!r}")

        self._elements = tuple(elements)
        self._ids = tuple(elements[i] for i in order)
        self._pos = {e: k for k, e in enumerate(self._ids)}
        pos = self._pos
        self._upper = [sorted(pos[elements[j]] for j in ups[i]) for i in order]
        self._lower: list[list[int]] = [[] for _ in range(size)]
        for k, hs in enumerate(self._upper):
            for h in hs:
                self._lower[h].append(k)

        up = [0] * size
        for k in reversed(range(size)):
            m = 1 << k
            for h in self._upper[k]:
                m |= up[h]
            up[k] = m
        down = [0] * size
        for k in range(size):
            m = 1 << k
            for l in self._lower[k]:
                m |= down[l]
            down[k] = m
        self._up, self._down = up, down
        self._full = (1 << size) - 1

        for k in range(size):
            for h in self._upper[k]:
                for h2 in self._upper[k]:
                    if h2 != h and up[h2] >> h & 1:
                        edge = (self._ids[k], self._ids[h])
                        raise NonHasseEdge(f"cover {edge!r} is implied by transitivity", edge)
        self._check_lattice()

        self._labels = {}
        if labels:
            cover_set = {(pos[lo], pos[hi]) for lo, hi in covers}
            for (lo, hi), lab in labels.items():
                if (pos.get(lo), pos.get(hi)) not in cover_set:
                    raise ValueError(f"label on non-cover ({lo!r}, {hi!r})")
                self._labels[(lo, hi)] = lab

    @classmethod
    def from_covers(cls, elements, covers, labels=None) -> FiniteLattice:
        return cls(elements, covers, labels)

    def _check_lattice(self) -> None:
        up, down, n = self._up, self._down, len(self._ids)
        if up[0] != self._full or down[n - 1] != self._full:
            raise NotALattice("no least or no greatest element")
        for i in range(n):
            for j in range(i + 1, n):
                ub = up[i] & up[j]
                if not ub or up[_lowest(ub)] != ub:
                    pair = (self._ids[i], self._ids[j])
                    raise NotALattice(f"{pair!r} has no least upper bound", pair)
                lb = down[i] & down[j]
                if not lb or down[_highest(lb)] != lb:
                    pair = (self._ids[i], self._ids[j])
                    raise NotALattice(f"{pair!r} has no greatest lower bound", pair)

    # basic structure

    @property
    def elements(self) -> tuple:
        return self._elements

    @property
    def labels(self) -> dict:
        return dict(self._labels)

    def __len__(self) -> int:
        return len(self._ids)

    def __contains__(self, w) -> bool:
        return w in self._pos

    def __iter__(self):
        return iter(self._elements)

    def _p(self, w) -> int:
        try:
            return self._pos[w]
        except KeyError:
            raise KeyError(f"{w!r} is not an element of this lattice") from None

    def covers(self) -> list[tuple]:
        return [(self._ids[k], self._ids[h]) for k in range(len(self._ids)) for h in self._upper[k]]

    @property
    def bottom(self):
        return self._ids[0]

    @property
    def top(self):
        return self._ids[-1]

    def leq(self, a, b) -> bool:
        return bool(self._up[self._p(a)] >> self._p(b) & 1)

    def lower_covers(self, w) -> set:
        return {self._ids[k] for k in self._lower[self._p(w)]}

    def upper_covers_of(self, w) -> set:
        return {self._ids[k] for k in self._upper[self._p(w)]}

    def down_set(self, w) -> set:
        return {self._ids[k] for k in _bits(self._down[self._p(w)])}

    def join(self, A: Iterable = ()) -> Any:
        return self._ids[self._join_idx(self._p(a) for a in A)]

    def meet(self, A: Iterable = ()) -> Any:
        lb = self._full
        for a in A:
            lb &= self._down[self._p(a)]
        return self._ids[_highest(lb)]

    def _join_idx(self, idxs: Iterable[int]) -> int:
        ub = self._full
        for i in idxs:
            ub &= self._up[i]
        return _lowest(ub)

    def ranks(self) -> dict:
        """Length of the longest chain from the bottom."""
        r = [0] * len(self._ids)
        for k in range(len(self._ids)):
            for h in self._upper[k]:
                r[h] = max(r[h], r[k] + 1)
        return {self._ids[k]: r[k] for k in range(len(r))}

    # irreducibles and canonical join representations

    def join_irreducibles(self) -> set:
        return {self._ids[k] for k, low in enumerate(self._lower) if len(low) == 1}

    def meet_irreducibles(self) -> set:
        return {self._ids[k] for k, up in enumerate(self._upper) if len(up) == 1}

    def _cjr_idx(self, w: int) -> frozenset[int] | None:
        up, below_w = self._up, self._down[w]
        candidate = set()
        for m in self._lower[w]:
            k_m = [x for x in _bits(below_w) if _lowest(up[x] & up[m]) == w]
            minimal = [x for x in k_m if not any(y != x and up[y] >> x & 1 for y in k_m)]
            if len(minimal) != 1:
                return None
            candidate.add(minimal[0])
        if self._join_idx(candidate) != w:
            return None
        for a in candidate:
            if self._join_idx(candidate - {a}) == w:
                return None
        # lowest among all irredundant representations: each joinand a must lie
        # below some element of every representation, i.e. the elements of
        # the down-set of w not above a cannot join to w
        for a in candidate:
            avoid = below_w & ~up[a]
            if avoid and self._join_idx(_bits(avoid)) == w:
                return None
        return frozenset(candidate)

    def canonical_join_representation(self, w) -> JoinRepresentation | None:
        """The unique lowest irredundant join representation of w, if any.

        Candidate joinands are the unique minimal elements of
        {x <= w : x v m = w}, one per lower cover m; when a canonical join
        representation exists it must equal this set, and the candidate is
        then checked for being a representation, irredundant, and lower than
        every other irredundant representation.
        """
        rep = self._cjr_idx(self._p(w))
        if rep is None:
            return None
        return JoinRepresentation(w, frozenset(self._ids[k] for k in rep))

    def canonical_join_complex(self) -> set[frozenset]:
        faces = set()
        for k in range(len(self._ids)):
            rep = self._cjr_idx(k)
            if rep is not None:
                faces.add(frozenset(self._ids[i] for i in rep))
        for face in faces:
            for a in face:
                assert face - {a} in faces, f"face {set(face)!r} has a non-face subset"
        return faces

    def count_check_covers_vs_joinands(self) -> bool:
        for k in range(len(self._ids)):
            rep = self._cjr_idx(k)
            if rep is None:
                raise MissingCJR(self._ids[k])
            if len(rep) != len(self._lower[k]):
                return False
        return True

    # export

    def to_json(self, element_json=None) -> dict:
        conv = element_json or (lambda e: e)
        out = {
            "elements": [conv(e) for e in self._elements],
            "covers": [[conv(lo), conv(hi)] for lo, hi in self.covers()],
        }
        if self._labels:
            out["labels"] = {f"{lo},{hi}": lab for (lo, hi), lab in sorted(self._labels.items(), key=str)}
        return out

    def to_dot(self, name: str = "L", node_label=str, labels: bool = False) -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for e in self._elements:
            lines.append(f"  {json.dumps(str(e))} [label={json.dumps(node_label(e))}];")
        for lo, hi in self.covers():
            attr = ""
            if labels and (lo, hi) in self._labels:
                attr = f" [label={json.dumps(str(self._labels[(lo, hi)]))}]"
            lines.append(f"  {json.dumps(str(lo))} -> {json.dumps(str(hi))}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_covers(elements, covers, labels=None) -> FiniteLattice:
    return FiniteLattice(elements, covers, labels)


def from_json(data: dict | str) -> FiniteLattice:
    if isinstance(data, str):
        data = json.loads(data)
    elements = [tuple(e) if isinstance(e, list) else e for e in data["elements"]]
    covers = [(tuple(lo) if isinstance(lo, list) else lo, tuple(hi) if isinstance(hi, list) else hi)
              for lo, hi in data["covers"]]
    return FiniteLattice(elements, covers)


def join(L: FiniteLattice, A: Iterable = ()):
    return L.join(A)


def meet(L: FiniteLattice, A: Iterable = ()):
    return L.meet(A)


def lower_covers(L: FiniteLattice, w) -> set:
    return L.lower_covers(w)


def upper_covers_of(L: FiniteLattice, w) -> set:
    return L.upper_covers_of(w)


def join_irreducibles(L: FiniteLattice) -> set:
    return L.join_irreducibles()


def canonical_join_representation(L: FiniteLattice, w) -> JoinRepresentation | None:
    return L.canonical_join_representation(w)


def canonical_join_complex(L: FiniteLattice) -> set[frozenset]:
    return L.canonical_join_complex()


def count_check_covers_vs_joinands(L: FiniteLattice) -> bool:
    return L.count_check_covers_vs_joinands()


def _signature(L: FiniteLattice) -> list[tuple[int, int, int]]:
    ranks = L.ranks()
    return [(ranks[L._ids[k]], len(L._lower[k]), len(L._upper[k])) for k in range(len(L._ids))]


def find_isomorphism(L1: FiniteLattice, L2: FiniteLattice) -> dict | None:
    """A bijection carrying covers of L1 exactly onto covers of L2, or None.

    Exact backtracking along a linear extension of L1: every lower cover of the
    current element is already mapped, so its image must be an element whose
    lower covers are exactly those images.
    """
    if len(L1) != len(L2) or len(L1.covers()) != len(L2.covers()):
        return None
    sig1, sig2 = _signature(L1), _signature(L2)
    if sorted(sig1) != sorted(sig2):
        return None
    size = len(L1)
    image = [-1] * size
    used = [False] * size
    lower2 = [frozenset(l) for l in L2._lower]

    def candidates(k: int) -> list[int]:
        if not L1._lower[k]:
            pool = range(size)
        else:
            pool = L2._upper[image[L1._lower[k][0]]]
        want = frozenset(image[l] for l in L1._lower[k])
        return [c for c in pool if not used[c] and sig2[c] == sig1[k] and lower2[c] == want]

    stack = [candidates(0)]
    k = 0
    while True:
        if not stack[-1]:
            stack.pop()
            k -= 1
            if k < 0:
                return None
            used[image[k]] = False
            image[k] = -1
            continue
        c = stack[-1].pop(0)
        image[k] = c
        used[c] = True
        k += 1
        if k == size:
            return {L1._ids[i]: L2._ids[image[i]] for i in range(size)}
        stack.append(candidates(k))


def complex_isomorphism(K1: Iterable[frozenset], K2: Iterable[frozenset]) -> dict | None:
    """A vertex bijection carrying the faces of K1 exactly onto those of K2, or None.

    Backtracking over vertices ordered by descending face count; meant for
    small complexes.
    """
    K1, K2 = {frozenset(f) for f in K1}, {frozenset(f) for f in K2}
    if len(K1) != len(K2):
        return None
    V1 = sorted({v for f in K1 for v in f}, key=repr)
    V2 = sorted({v for f in K2 for v in f}, key=repr)
    if len(V1) != len(V2):
        return None

    def profile(K, v):
        return sorted(len(f) for f in K if v in f)

    prof1 = {v: profile(K1, v) for v in V1}
    prof2 = {v: profile(K2, v) for v in V2}
    V1.sort(key=lambda v: -len(prof1[v]))
    image: dict = {}

    def consistent() -> bool:
        done = set(image)
        for f in K1:
            if f <= done and frozenset(image[v] for v in f) not in K2:
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(V1):
            return True
        v = V1[i]
        for c in V2:
            if c in image.values() or prof2[c] != prof1[v]:
                continue
            image[v] = c
            if consistent() and extend(i + 1):
                return True
            del image[v]
        return False

    return dict(image) if extend(0) else None
