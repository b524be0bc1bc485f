import xml.etree.ElementTree as ET
from itertools import combinations

import pytest
from hypothesis import given

from strategies import module_pairs, modules
from torslat.arcs import (
    Arc,
    ArcDiagram,
    IncompatibleArcs,
    NotOverlapping,
    SameArc,
    arc_complex,
    arc_points,
    compatible,
    enumerate_arcs,
    hom_count_via_arcs,
    is_pred_closed_subarc,
    is_subarc,
    is_succ_closed_subarc,
    left_of,
    maximal_faces,
    mirror,
    overlap,
    render_gallery,
    render_svg,
    restrict,
    shares_endpoint,
    sigma,
    sigma_inv,
)
from torslat.strings import StringModule, hom_dim, indecomposable_factors, indecomposable_submodules

A = Arc


def test_arc_validation():
    with pytest.raises(ValueError):
        A(2, 2)
    with pytest.raises(ValueError):
        A(0, 3, "L")
    with pytest.raises(ValueError):
        A(0, 2, "X")
    a = A(0, 3, "LR")
    assert a.side(1) == "L" and a.side(2) == "R" and a.side(0) is None
    assert a.left == {1} and a.right == {2}
    assert str(a) == "arc(0,3:LR)" and str(A(1, 2)) == "arc(1,2)"


def test_sigma():
    assert sigma(StringModule(2, 1, 1)) == A(0, 1)
    assert sigma(StringModule(3, 1, 3, "RL")) == A(0, 3, "RL")
    assert mirror(A(0, 3, "RL")) == A(0, 3, "LR")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sigma_is_a_bijection(n):
    arcs = enumerate_arcs(n)
    assert len(set(arcs)) == len(arcs)
    assert {(a.b, a.t) for a in arcs} == {(b, t) for t in range(n + 1) for b in range(t)}
    for a in arcs:
        assert sigma(sigma_inv(a, n)) == a


@given(modules())
def test_closed_subarcs_are_factors_and_submodules(m):
    a = sigma(m)
    preds = {sigma_inv(b, m.n) for b in _subarcs(a) if is_pred_closed_subarc(b, a)}
    succs = {sigma_inv(b, m.n) for b in _subarcs(a) if is_succ_closed_subarc(b, a)}
    assert preds == indecomposable_factors(m)
    assert succs == indecomposable_submodules(m)


def _subarcs(a):
    return [restrict(a, b, t) for b in range(a.b, a.t) for t in range(b + 1, a.t + 1)]


@given(module_pairs())
def test_hom_via_arcs(pair):
    m, m2 = pair
    assert hom_count_via_arcs(sigma(m), sigma(m2)) == hom_dim(m, m2)


def test_subarc():
    assert is_subarc(A(1, 3, "R"), A(0, 4, "LRL"))
    assert not is_subarc(A(1, 3, "L"), A(0, 4, "LRL"))
    assert not is_subarc(A(0, 4, "LRL"), A(1, 3, "R"))


def test_compatibility_examples():
    assert compatible(A(0, 1), A(1, 2))           # top of one is bottom of the other
    assert not compatible(A(0, 1), A(0, 2, "L"))  # shared bottom
    assert not compatible(A(0, 2, "L"), A(1, 2))  # shared top
    assert compatible(A(0, 2, "L"), A(1, 3, "R"))
    assert not compatible(A(0, 2, "R"), A(1, 3, "R"))  # interiors cross
    assert compatible(A(0, 3, "LL"), A(1, 2))
    with pytest.raises(SameArc):
        compatible(A(0, 1), A(0, 1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_shared_endpoints_are_incompatible(n):
    for a, c in combinations(enumerate_arcs(n), 2):
        if shares_endpoint(a, c):
            assert not compatible(a, c)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_compatible_overlapping_arcs_are_ordered_by_left_of(n):
    for a, c in combinations(enumerate_arcs(n), 2):
        if shares_endpoint(a, c) or not overlap(a, c):
            continue
        if compatible(a, c):
            assert left_of(a, c) != left_of(c, a), (a, c)
        else:
            assert not left_of(a, c) and not left_of(c, a), (a, c)


def test_left_of():
    assert left_of(A(1, 2), A(0, 3, "RR"))
    assert not left_of(A(0, 3, "RR"), A(1, 2))
    assert left_of(A(0, 3, "LL"), A(1, 2))
    with pytest.raises(NotOverlapping):
        left_of(A(0, 1), A(2, 3))


@pytest.mark.parametrize("n,faces,facets", [(1, 2, 1), (2, 6, 3), (3, 24, 11), (4, 120, 49)])
def test_arc_complex_counts(n, faces, facets):
    K = arc_complex(n)
    assert len(K) == faces
    assert len(maximal_faces(n)) == facets
    maximal = {f for f in K if not any(f < g for g in K)}
    assert maximal == set(maximal_faces(n))


@pytest.mark.parametrize("n", [2, 3])
def test_arc_complex_faces_are_closed_under_subsets(n):
    K = arc_complex(n)
    for f in K:
        for a in f:
            assert f - {a} in K


def test_diagram_validation_and_json():
    d = ArcDiagram(2, {A(0, 1), A(1, 2)})
    assert ArcDiagram.from_json(d.to_json()) == d
    assert d.to_json() == {"n": 2, "arcs": [{"b": 0, "t": 1, "sides": {}}, {"b": 1, "t": 2, "sides": {}}]}
    with pytest.raises(IncompatibleArcs):
        ArcDiagram(2, {A(0, 1), A(0, 2, "L")})
    with pytest.raises(ValueError):
        ArcDiagram(1, {A(0, 2, "L")})


@pytest.mark.parametrize("n", [3, 4])
def test_rendered_arcs_stay_on_their_sides(n):
    cx = None
    for face in maximal_faces(n):
        d = ArcDiagram(n, face)
        for a, pts in arc_points(d).items():
            cx = pts[0][0]
            assert pts[-1][0] == cx
            for k, (x, _) in zip(a.interior, pts[1:-1]):
                assert (x < cx) == (a.side(k) == "L")


def test_svg_is_well_formed():
    d = ArcDiagram(3, {A(0, 3, "LL"), A(1, 2)})
    root = ET.fromstring(render_svg(d))
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f"{ns}path")) == 2
    assert len(root.findall(f"{ns}circle")) == 4
    gallery = ET.fromstring(render_gallery([d, ArcDiagram(3)]))
    assert len(gallery.findall(f"{ns}g")) == 2
