"""Torsion classes of RA_n, stored by their indecomposable members.

Module ids are positions in ``enumerate_indecomposables(n)``; a class is a
sorted tuple of ids. All closure work happens on integer bitmasks over those
ids, using tables precomputed once per rank by :func:`algebra`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from . import strings as sm
from .errors import BudgetExceeded, RankTooLarge, budget
from .lattice import FiniteLattice
from .strings import StringModule


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Algebra:
    """Precomputed combinatorics of mod RA_n."""

    def __init__(self, n: int):
        self.n = n
        self.modules = sm.enumerate_indecomposables(n)
        self.index = {m: i for i, m in enumerate(self.modules)}
        size = len(self.modules)
        self.full = (1 << size) - 1
        self.factors = [self.mask(sm.indecomposable_factors(m)) for m in self.modules]
        self.subs = [self.mask(sm.indecomposable_submodules(m)) for m in self.modules]
        self.dual = [self.index[sm.dualize(m)] for m in self.modules]
        self.hom = [[sm.hom_dim(a, b) for b in self.modules] for a in self.modules]
        # nonzero hom masks: into[i] = {j : Hom(j, i) != 0}, out_of[i] = {j : Hom(i, j) != 0}
        self.into = [sum(1 << j for j in range(size) if self.hom[j][i]) for i in range(size)]
        self.out_of = [sum(1 << j for j in range(size) if self.hom[i][j]) for i in range(size)]
        # glued[i] = list of (j, e): e is the extension with sub i and quotient j
        self.glued: list[list[tuple[int, int]]] = [[] for _ in range(size)]
        self.glued_rev: list[list[tuple[int, int]]] = [[] for _ in range(size)]
        for i, a in enumerate(self.modules):
            for j, b in enumerate(self.modules):
                if a.p <= b.q and b.p <= a.q:
                    continue
                e = sm.glue(a, b)
                if e is not None:
                    self.glued[i].append((j, self.index[e]))
                    self.glued_rev[j].append((i, self.index[e]))

    def mask(self, ms: Iterable[StringModule]) -> int:
        out = 0
        for m in ms:
            out |= 1 << self.index[m]
        return out

    def modules_of(self, mask: int) -> list[StringModule]:
        return [self.modules[i] for i in _bits(mask)]

    def close(self, mask: int, down: list[int] | None = None) -> int:
        """Smallest superset closed under the given quotient table and gluing."""
        down = self.factors if down is None else down
        todo = deque(_bits(mask))
        closed = 0
        while todo:
            i = todo.popleft()
            if closed >> i & 1:
                continue
            closed |= 1 << i
            for k in _bits(down[i] & ~closed):
                todo.append(k)
            for j, e in self.glued[i]:
                if closed >> j & 1 and not closed >> e & 1:
                    todo.append(e)
            for j, e in self.glued_rev[i]:
                if closed >> j & 1 and not closed >> e & 1:
                    todo.append(e)
        return closed

    def close_extensions(self, mask: int) -> int:
        """Filt: closure under gluing only."""
        return self.close(mask, [1 << i for i in range(len(self.modules))])

    def close_free(self, mask: int) -> int:
        """Torsion-free closure: submodules and gluing."""
        return self.close(mask, self.subs)

    def is_closed(self, mask: int, down: list[int] | None = None) -> bool:
        down = self.factors if down is None else down
        for i in _bits(mask):
            if down[i] & ~mask:
                return False
            for j, e in self.glued[i]:
                if mask >> j & 1 and not mask >> e & 1:
                    return False
        return True

    def perp(self, mask: int) -> int:
        """{X : Hom(Y, X) = 0 for all Y in mask}."""
        return sum(1 << x for x in range(len(self.modules)) if not self.into[x] & mask)

    def left_perp(self, mask: int) -> int:
        """{X : Hom(X, Y) = 0 for all Y in mask}."""
        return sum(1 << x for x in range(len(self.modules)) if not self.out_of[x] & mask)

    def dualize(self, mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= 1 << self.dual[i]
        return out

    def minimal_extending(self, mask: int) -> list[int]:
        out = []
        for m in range(len(self.modules)):
            if mask >> m & 1:
                continue
            if self.factors[m] & ~(1 << m) & ~mask:  # P1
                continue
            if self.into[m] & mask:  # P3
                continue
            new = self.close(mask | 1 << m) & ~mask
            if all(self.factors[x] >> m & 1 for x in _bits(new)):
                out.append(m)
        return out

    def minimal_coextending(self, mask: int) -> list[int]:
        out = []
        for m in range(len(self.modules)):
            if mask >> m & 1:
                continue
            if self.subs[m] & ~(1 << m) & ~mask:  # P1'
                continue
            if self.out_of[m] & mask:  # P3'
                continue
            new = self.close_free(mask | 1 << m) & ~mask
            if all(self.subs[x] >> m & 1 for x in _bits(new)):
                out.append(m)
        return out


@lru_cache(maxsize=None)
def algebra(n: int) -> Algebra:
    return Algebra(n)


@dataclass(frozen=True)
class TorsionClass:
    n: int
    members: tuple[int, ...]

    @classmethod
    def from_mask(cls, n: int, mask: int) -> TorsionClass:
        return cls(n, tuple(_bits(mask)))

    @cached_property
    def mask(self) -> int:
        out = 0
        for i in self.members:
            out |= 1 << i
        return out

    @property
    def modules(self) -> list[StringModule]:
        mods = algebra(self.n).modules
        return [mods[i] for i in self.members]

    def __contains__(self, m: StringModule) -> bool:
        return algebra(self.n).index[m] in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: TorsionClass) -> bool:
        return self.mask & ~other.mask == 0

    def to_json(self) -> list[dict]:
        return [m.to_json() for m in self.modules]

    def __str__(self) -> str:
        return "{" + ", ".join(str(m) for m in self.modules) + "}"


@dataclass(frozen=True)
class CoverLabel:
    lower: TorsionClass
    upper: TorsionClass
    brick: StringModule


def torsion_closure(n: int, S: Iterable[StringModule]) -> TorsionClass:
    alg = algebra(n)
    return TorsionClass.from_mask(n, alg.close(alg.mask(S)))


def filt(n: int, S: Iterable[StringModule]) -> frozenset[StringModule]:
    """Indecomposables of the extension closure of S (no factors added)."""
    alg = algebra(n)
    return frozenset(alg.modules_of(alg.close_extensions(alg.mask(S))))


def inversion_set(ms: Iterable[StringModule]) -> frozenset[tuple[int, int]]:
    return frozenset(sm.inv_pair(m) for m in ms)


def filt_gen(m: StringModule) -> TorsionClass:
    """Filt(Gen M): the join-irreducible torsion class attached to the brick M."""
    return torsion_closure(m.n, sm.indecomposable_factors(m))


def perp(T: TorsionClass) -> frozenset[StringModule]:
    alg = algebra(T.n)
    return frozenset(alg.modules_of(alg.perp(T.mask)))


def join_classes(n: int, classes: Iterable[TorsionClass]) -> TorsionClass:
    mask = 0
    for T in classes:
        mask |= T.mask
    return TorsionClass.from_mask(n, algebra(n).close(mask))


def meet_classes(n: int, classes: Iterable[TorsionClass]) -> TorsionClass:
    mask = algebra(n).full
    for T in classes:
        mask &= T.mask
    return TorsionClass.from_mask(n, mask)


def minimal_extending(T: TorsionClass) -> list[StringModule]:
    """Indecomposables M outside T with every proper factor in T, Hom(T, M) = 0,
    and M a factor of every indecomposable of Filt(T + M) not already in T."""
    alg = algebra(T.n)
    return [alg.modules[m] for m in alg.minimal_extending(T.mask)]


def minimal_coextending(n: int, F: Iterable[StringModule]) -> list[StringModule]:
    """Dual notion for a torsion-free class given by its indecomposables."""
    alg = algebra(n)
    return [alg.modules[m] for m in alg.minimal_coextending(alg.mask(F))]


def upper_covers(T: TorsionClass) -> list[tuple[TorsionClass, CoverLabel]]:
    alg = algebra(T.n)
    out = []
    for m in alg.minimal_extending(T.mask):
        up = TorsionClass.from_mask(T.n, alg.close(T.mask | 1 << m))
        out.append((up, CoverLabel(T, up, alg.modules[m])))
    return out


def is_torsion_class(n: int, S: Iterable[StringModule]) -> bool:
    alg = algebra(n)
    return alg.is_closed(alg.mask(S))


def is_torsion_free_class(n: int, S: Iterable[StringModule]) -> bool:
    alg = algebra(n)
    return alg.is_closed(alg.mask(S), alg.subs)


BRUTEFORCE_MAX_RANK = 3


def enumerate_torsion_classes_bruteforce(n: int) -> set[TorsionClass]:
    """Scan every subset of indecomposables for closure (2^11 subsets at n = 3)."""
    if n > BRUTEFORCE_MAX_RANK:
        raise RankTooLarge(f"subset scan is limited to n <= {BRUTEFORCE_MAX_RANK}, got {n}")
    alg = algebra(n)
    return {TorsionClass.from_mask(n, s) for s in range(alg.full + 1) if alg.is_closed(s)}


def _extension_absorbed(alg: Algebra, cls: int, m: int) -> bool:
    """Every indecomposable X with m as a submodule and X/m in cls lies in cls.

    Only indecomposable middle terms are examined.
    """
    mod = alg.modules[m]
    for x, big in enumerate(alg.modules):
        if x == m or not sm.contains_substring(big, mod) or not sm.is_sub_interval(big, mod.p, mod.q):
            continue
        if all(cls >> alg.index[piece] & 1 for piece in sm.complement_pieces(big, mod)):
            if not cls >> x & 1:
                return False
    return True


def check_p2(T: TorsionClass, M: StringModule) -> bool:
    """Extension property of a minimal extending module, on indecomposable middles.

    For each indecomposable X containing M as a submodule with every summand
    of X/M in T, X must already lie in T.
    """
    alg = algebra(T.n)
    m = alg.index[M]
    if m not in alg.minimal_extending(T.mask):
        raise ValueError(f"{M} is not a minimal extending module for {T}")
    return _extension_absorbed(alg, T.mask, m)


def min_coextending_check(T: TorsionClass, M: StringModule) -> bool:
    """M is minimal co-extending for F = Filt(T + M)^perp.

    Checks proper submodules of M lie in F, Hom(M, F) = 0, the extension
    property read through the duality, and that Filt(F + M) covers F.
    """
    alg = algebra(T.n)
    m = alg.index[M]
    if m not in alg.minimal_extending(T.mask):
        raise ValueError(f"{M} is not a minimal extending module for {T}")
    upper = alg.close(T.mask | 1 << m)
    F = alg.perp(upper)
    if F >> m & 1:
        return False
    if alg.subs[m] & ~(1 << m) & ~F:
        return False
    if alg.out_of[m] & F:
        return False
    # 0 -> F -> X -> M -> 0 dualizes to 0 -> D M -> D X -> D F -> 0
    if not _extension_absorbed(alg, alg.dualize(F), alg.dual[m]):
        return False
    return m in alg.minimal_coextending(F)


@dataclass
class TorsLattice:
    """tors RA_n with deterministic breadth-first ids and brick labels on covers."""

    n: int
    classes: list[TorsionClass]
    lattice: FiniteLattice
    bricks: dict[tuple[int, int], StringModule] = field(default_factory=dict)

    @cached_property
    def ids(self) -> dict[TorsionClass, int]:
        return {T: k for k, T in enumerate(self.classes)}

    def id_of(self, T: TorsionClass) -> int:
        return self.ids[T]

    def __len__(self) -> int:
        return len(self.classes)

    def cover_labels(self) -> list[CoverLabel]:
        return [CoverLabel(self.classes[lo], self.classes[hi], b) for (lo, hi), b in self.bricks.items()]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "elements": [T.to_json() for T in self.classes],
            "covers": [[lo, hi, b.to_json()] for (lo, hi), b in self.bricks.items()],
        }


def build_tors_lattice(n: int, max_elements: int | None = None) -> TorsLattice:
    """Breadth-first saturation from the zero class through upper covers."""
    cap = budget() if max_elements is None else max_elements
    alg = algebra(n)
    zero = 0
    seen = {zero: 0}
    order = [zero]
    bricks: dict[tuple[int, int], StringModule] = {}
    queue = deque([zero])
    while queue:
        cur = queue.popleft()
        for m in alg.minimal_extending(cur):
            up = alg.close(cur | 1 << m)
            if up not in seen:
                if len(order) >= cap:
                    raise BudgetExceeded(f"more than {cap} torsion classes at n={n}")
                seen[up] = len(order)
                order.append(up)
                queue.append(up)
            bricks[(seen[cur], seen[up])] = alg.modules[m]
    classes = [TorsionClass.from_mask(n, mask) for mask in order]
    lat = FiniteLattice(list(range(len(classes))), list(bricks), labels={k: str(v) for k, v in bricks.items()})
    return TorsLattice(n, classes, lat, bricks)
