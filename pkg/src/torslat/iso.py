"""The map phi from torsion classes of RA_n to permutations, and its checks.

phi reads the inversion set of T off its indecomposables: the module on
[p, q] contributes the pair (p - 1, q).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import strings as sm
from .arcs import arc_complex, mirror, sigma
from .errors import TorslatError
from .lattice import FiniteLattice
from .torsion import TorsionClass, TorsLattice, build_tors_lattice, filt_gen, inversion_set
from .weak import Perm, arc_permutation, build_weak_order, delta, inversions, perm_from_inversions, weak_join


class InternalInversionFailure(TorslatError, RuntimeError):
    """The pair set of a torsion class was not an inversion set."""


@lru_cache(maxsize=8)
def tors_lattice(n: int) -> TorsLattice:
    return build_tors_lattice(n)


@lru_cache(maxsize=8)
def weak_order(n: int) -> FiniteLattice:
    return build_weak_order(n)


def phi(T: TorsionClass) -> Perm:
    w = perm_from_inversions(inversion_set(T.modules), T.n)
    if w is None:
        raise InternalInversionFailure(f"pairs of {T} are not the inversions of any permutation")
    return w


def brick_permutation(m: sm.StringModule) -> Perm:
    """Join-irreducible permutation matched with the brick m.

    This is the image of filt_gen(m) under phi. Its single descent gives the
    mirror image of sigma(m), since sigma copies arrow directions to sides
    while delta puts earlier values on the left.
    """
    return arc_permutation(mirror(sigma(m)), m.n)


def joinand_bricks(T: TorsionClass, TL: TorsLattice | None = None) -> list[sm.StringModule]:
    """Bricks of the canonical joinands of T, read off their unique lower covers."""
    TL = TL or tors_lattice(T.n)
    L = TL.lattice
    rep = L.canonical_join_representation(TL.id_of(T))
    if rep is None:
        raise InternalInversionFailure(f"{T} has no canonical join representation")
    out = []
    for j in rep.joinands:
        (lo,) = L.lower_covers(j)
        out.append(TL.bricks[(lo, j)])
    return sm.sorted_modules(out)


def phi_via_cjr(T: TorsionClass, TL: TorsLattice | None = None) -> Perm:
    return weak_join((brick_permutation(m) for m in joinand_bricks(T, TL)), T.n)


@dataclass
class IsoReport:
    n: int
    sizes: tuple[int, int]
    bijective: bool = True
    cover_preserving: bool = True
    cjc_isomorphic: bool = True
    routes_agree: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bijective and self.cover_preserving and self.cjc_isomorphic and self.routes_agree

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sizes": list(self.sizes),
            "bijective": self.bijective,
            "cover_preserving": self.cover_preserving,
            "cjc_isomorphic": self.cjc_isomorphic,
            "routes_agree": self.routes_agree,
            "failures": list(self.failures),
        }


def _check_bijective(rep: IsoReport, TL: TorsLattice, W: FiniteLattice, images: list[Perm]) -> None:
    if len(set(images)) != len(images):
        rep.bijective = False
        rep.failures.append("phi is not injective")
    missing = set(W.elements) - set(images)
    if missing:
        rep.bijective = False
        rep.failures.append(f"phi misses {len(missing)} permutations, e.g. {min(missing)}")


def _check_covers(rep: IsoReport, TL: TorsLattice, W: FiniteLattice, images: list[Perm]) -> None:
    mapped = {(images[lo], images[hi]) for lo, hi in TL.lattice.covers()}
    weak = set(W.covers())
    for lo, hi in sorted(mapped - weak):
        rep.cover_preserving = False
        rep.failures.append(f"cover {lo} < {hi} of tors is not a weak cover")
    for lo, hi in sorted(weak - mapped):
        rep.cover_preserving = False
        rep.failures.append(f"weak cover {lo} < {hi} is not the image of a cover")
    for (lo, hi), brick in TL.bricks.items():
        a, b = inversions(images[lo]), inversions(images[hi])
        if not a <= b or b - a != {sm.inv_pair(brick)}:
            rep.cover_preserving = False
            rep.failures.append(f"cover {lo} < {hi} adds {sorted(b - a)}, expected {sm.inv_pair(brick)} from {brick}")


def _check_cjc(rep: IsoReport, TL: TorsLattice, W: FiniteLattice, images: list[Perm]) -> None:
    n = TL.n
    L = TL.lattice

    def fail(msg: str) -> None:
        rep.cjc_isomorphic = False
        rep.failures.append(msg)

    # zeta: brick -> join-irreducible torsion class
    zeta = {m: TL.id_of(filt_gen(m)) for m in sm.enumerate_indecomposables(n)}
    if set(zeta.values()) != L.join_irreducibles() or len(set(zeta.values())) != len(zeta):
        fail("filt_gen is not a bijection onto the join-irreducible torsion classes")
        return
    brick_of = {j: m for m, j in zeta.items()}

    gamma_tors = L.canonical_join_complex()
    as_arcs = {frozenset(sigma(brick_of[j]) for j in face) for face in gamma_tors}
    arcs = arc_complex(n)
    if as_arcs != arcs:
        fail(f"sigma carries the tors complex to {len(as_arcs)} faces, the arc complex has {len(arcs)}")

    gamma_weak = W.canonical_join_complex()
    as_perms = {frozenset(arc_permutation(a, n) for a in face) for face in arcs}
    if as_perms != gamma_weak:
        fail(f"delta^-1 carries the arc complex to {len(as_perms)} faces, the weak complex has {len(gamma_weak)}")

    for w in W.elements:
        rep_w = W.canonical_join_representation(w)
        from_arcs = {arc_permutation(a, n) for a in delta(w).arcs}
        if rep_w is None or set(rep_w.joinands) != from_arcs:
            fail(f"canonical joinands of {w} do not match the arcs of delta({w})")

    via_phi = {frozenset(images[j] for j in face) for face in gamma_tors}
    if via_phi != gamma_weak:
        fail("phi does not carry the tors complex onto the weak complex")


def verify_isomorphism(n: int) -> IsoReport:
    TL = tors_lattice(n)
    W = weak_order(n)
    rep = IsoReport(n, (len(TL), len(W)))
    images = [phi(T) for T in TL.classes]
    _check_bijective(rep, TL, W, images)
    _check_covers(rep, TL, W, images)
    _check_cjc(rep, TL, W, images)
    for k, T in enumerate(TL.classes):
        other = phi_via_cjr(T, TL)
        if other != images[k]:
            rep.routes_agree = False
            rep.failures.append(f"class {k}: phi gives {images[k]}, canonical joinands give {other}")
    return rep

