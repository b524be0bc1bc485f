from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import permutations
from torslat.arcs import Arc, ArcDiagram, arc_complex
from torslat.errors import BudgetExceeded
from torslat.weak import (
    NotInImage,
    all_permutations,
    arc_permutation,
    build_weak_order,
    delta,
    delta_inv,
    descents,
    inversions,
    perm,
    perm_from_inversions,
    transitive_closure,
    weak_covers_below,
    weak_join,
    weak_leq,
)


def test_perm_parsing():
    assert perm("210") == (2, 1, 0)
    assert perm("2,1,0") == (2, 1, 0)
    assert perm([1, 0]) == (1, 0)
    with pytest.raises(ValueError):
        perm("112")


def test_inversions():
    assert inversions(perm("012")) == set()
    assert inversions(perm("210")) == {(0, 1), (0, 2), (1, 2)}
    assert inversions(perm("102")) == {(0, 1)}
    assert descents(perm("201")) == [(0, 2)]


def test_perm_from_inversions():
    assert perm_from_inversions(set(), 2) == (0, 1, 2)
    assert perm_from_inversions({(0, 1), (0, 2), (1, 2)}, 2) == (2, 1, 0)
    assert perm_from_inversions({(0, 2)}, 2) is None
    assert perm_from_inversions({(0, 1), (1, 2)}, 2) is None
    assert perm_from_inversions({(0, 5)}, 2) is None


@given(st.integers(1, 5).flatmap(permutations))
def test_inversion_roundtrip(w):
    assert perm_from_inversions(inversions(w), len(w) - 1) == w


def test_covers_below():
    assert weak_covers_below(perm("012")) == set()
    assert weak_covers_below(perm("210")) == {perm("120"), perm("201")}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_one_descent_iff_join_irreducible(n):
    W = build_weak_order(n)
    jis = W.join_irreducibles()
    for w in W.elements:
        assert (w in jis) == (len(descents(w)) == 1)
        assert len(W.lower_covers(w)) == len(descents(w)) == len(delta(w))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_order_is_inversion_containment(n):
    W = build_weak_order(n)
    els = W.elements
    for u in els:
        for w in els:
            assert W.leq(u, w) == weak_leq(u, w)


@pytest.mark.parametrize("n", [2, 3])
def test_join_by_transitive_closure(n):
    W = build_weak_order(n)
    for u, w in combinations(W.elements, 2):
        assert weak_join([u, w]) == W.join([u, w])


def test_named_join():
    assert weak_join([perm("102"), perm("021")]) == perm("210")
    assert weak_join([perm("120")]) == perm("120")
    assert weak_join([], 3) == perm("0123")


@given(st.integers(1, 4).flatmap(lambda n: st.lists(permutations(n), min_size=1, max_size=4)))
def test_join_is_least_upper_bound(ws):
    j = weak_join(ws)
    assert all(weak_leq(w, j) for w in ws)
    assert inversions(j) == transitive_closure(p for w in ws for p in inversions(w))


def test_delta_examples():
    assert delta(perm("210")) == ArcDiagram(2, {Arc(0, 1), Arc(1, 2)})
    assert delta(perm("0123")) == ArcDiagram(3)
    assert delta(perm("1302")) == ArcDiagram(3, {Arc(0, 3, "LR")})
    assert delta_inv(ArcDiagram(2, {Arc(0, 1)})) == perm("102")
    assert delta_inv(ArcDiagram(2, {Arc(1, 2)})) == perm("021")


def test_arc_permutation_has_the_arc_as_its_descent():
    for a in [Arc(0, 3, "LR"), Arc(1, 4, "RL"), Arc(0, 1)]:
        w = arc_permutation(a, 4)
        assert delta(w).arcs == {a}
    with pytest.raises(ValueError):
        arc_permutation(Arc(0, 3, "LL"), 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_delta_is_a_bijection_onto_noncrossing_diagrams(n):
    images = {delta(w).arcs for w in all_permutations(n)}
    assert images == arc_complex(n)
    for w in all_permutations(n):
        assert delta_inv(delta(w)) == w


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cjr_is_read_from_arcs(n):
    W = build_weak_order(n)
    for w in W.elements:
        rep = W.canonical_join_representation(w)
        assert rep.joinands == {delta_inv(ArcDiagram(n, {a})) for a in delta(w).arcs}


def test_delta_inv_of_a_non_diagram():
    # ArcDiagram refuses incompatible arcs, so build the bad case by hand
    d = ArcDiagram(2, {Arc(0, 1)})
    object.__setattr__(d, "arcs", frozenset({Arc(0, 1), Arc(0, 2, "L")}))
    with pytest.raises(NotInImage):
        delta_inv(d)


def test_budget():
    with pytest.raises(BudgetExceeded):
        build_weak_order(4, max_elements=100)
