"""Small named lattices used as reference points."""

from __future__ import annotations

from .lattice import FiniteLattice


def pentagon() -> FiniteLattice:
    """N5: the chain 0 < y < z < 1 plus an element x incomparable to y and z."""
    return FiniteLattice(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("0", "y"), ("y", "z"), ("x", "1"), ("z", "1")],
    )


def diamond() -> FiniteLattice:
    """M3: three atoms below a common top."""
    return FiniteLattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )


def chain(k: int) -> FiniteLattice:
    return FiniteLattice(list(range(k + 1)), [(i, i + 1) for i in range(k)])


def point() -> FiniteLattice:
    return FiniteLattice(["*"], [])


def noniso_pair() -> tuple[FiniteLattice, FiniteLattice]:
    """Two 5-element lattices with isomorphic canonical join complexes.

    The first is a bottom, one atom, two incomparable elements above it and a
    top; the second is N5 drawn with its long side on the left.
    """
    left = FiniteLattice(
        ["0", "u", "v", "w", "1"],
        [("0", "u"), ("u", "v"), ("u", "w"), ("v", "1"), ("w", "1")],
    )
    right = FiniteLattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("a", "c"), ("c", "1"), ("b", "1")],
    )
    return left, right
