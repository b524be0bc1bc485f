import json

import pytest
from hypothesis import given

from strategies import module_pairs, modules
from torslat.errors import InvalidRank, OutOfSupport, OverlappingSupports, RankMismatch
from torslat.strings import (
    StringModule,
    complement_pieces,
    contains_substring,
    count_indecomposables,
    dualize,
    enumerate_indecomposables,
    glue,
    hom_dim,
    hom_dim_oracle,
    indecomposable_factors,
    indecomposable_submodules,
    inv_pair,
    is_brick,
    parse_module,
    simple,
)


def M(n, p, q, word=""):
    return StringModule(n, p, q, word)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 11), (4, 26), (5, 57)])
def test_counts(n, count):
    ms = enumerate_indecomposables(n)
    assert len(ms) == count == count_indecomposables(n)
    assert len(set(ms)) == count


def test_enumeration_order_and_rank_two():
    assert [str(m) for m in enumerate_indecomposables(2)] == ["S1", "M[1-2:L]", "M[1-2:R]", "S2"]


def test_bad_modules_rejected():
    with pytest.raises(InvalidRank):
        enumerate_indecomposables(0)
    with pytest.raises(ValueError):
        M(2, 2, 1)
    with pytest.raises(ValueError):
        M(3, 1, 3, "R")
    with pytest.raises(ValueError):
        M(3, 1, 2, "X")
    with pytest.raises(OutOfSupport):
        M(3, 1, 2, "R").edge(2)


def test_factors_of_a_single_arrow():
    # 1 -> 2: the top sits at vertex 1, the socle at vertex 2
    m = M(2, 1, 2, "R")
    assert indecomposable_factors(m) == {m, simple(2, 1)}
    assert indecomposable_submodules(m) == {m, simple(2, 2)}


def test_factors_of_a_peak_and_a_valley():
    m = M(3, 1, 3, "LR")  # 1 <- 2 -> 3, top at 2
    assert indecomposable_factors(m) == {m, M(3, 1, 2, "L"), M(3, 2, 3, "R"), simple(3, 2)}
    assert indecomposable_submodules(m) == {m, simple(3, 1), simple(3, 3)}


def test_hom_examples():
    s1, s2 = simple(2, 1), simple(2, 2)
    r = M(2, 1, 2, "R")
    assert hom_dim(r, s1) == 1 and hom_dim(s1, r) == 0
    assert hom_dim(s2, r) == 1 and hom_dim(r, s2) == 0
    assert hom_dim(s1, s2) == 0
    with pytest.raises(RankMismatch):
        hom_dim(s1, simple(3, 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hom_formula_matches_linear_algebra(n):
    ms = enumerate_indecomposables(n)
    for a in ms:
        for b in ms:
            assert hom_dim(a, b) == hom_dim_oracle(a, b), (a, b)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_every_indecomposable_is_a_brick(n):
    assert all(is_brick(m) for m in enumerate_indecomposables(n))


@given(modules())
def test_endomorphisms_are_scalars(m):
    assert hom_dim_oracle(m, m) == 1


@given(module_pairs(max_n=6))
def test_hom_formula_random(pair):
    a, b = pair
    assert hom_dim(a, b) == hom_dim_oracle(a, b)


@given(module_pairs())
def test_duality_reverses_hom(pair):
    a, b = pair
    assert hom_dim(a, b) == hom_dim(dualize(b), dualize(a))


@given(modules())
def test_duality_swaps_factors_and_submodules(m):
    assert {dualize(x) for x in indecomposable_factors(m)} == indecomposable_submodules(dualize(m))
    assert dualize(dualize(m)) == m


@given(modules())
def test_factors_are_quotients(m):
    for f in indecomposable_factors(m):
        assert hom_dim_oracle(m, f) >= 1
    for s in indecomposable_submodules(m):
        assert hom_dim_oracle(s, m) >= 1


def test_glue():
    s1, s2 = simple(2, 1), simple(2, 2)
    assert glue(s2, s1) == M(2, 1, 2, "R")
    assert glue(s1, s2) == M(2, 1, 2, "L")
    assert glue(simple(3, 1), simple(3, 3)) is None
    with pytest.raises(OverlappingSupports):
        glue(s1, M(2, 1, 2, "R"))


@given(module_pairs())
def test_glue_keeps_sub_and_quotient(pair):
    a, b = pair
    if a.p <= b.q and b.p <= a.q:
        return
    e = glue(a, b)
    if e is None:
        assert a.q + 1 < b.p or b.q + 1 < a.p
        return
    assert a in indecomposable_submodules(e)
    assert b in indecomposable_factors(e)
    assert sorted(complement_pieces(e, a), key=str) == [b]


def test_complement_pieces_and_containment():
    x = M(4, 1, 4, "RLR")
    m = M(4, 2, 3, "L")
    assert contains_substring(x, m)
    assert complement_pieces(x, m) == [simple(4, 1), simple(4, 4)]
    assert not contains_substring(x, M(4, 2, 3, "R"))


def test_inv_pair():
    assert inv_pair(simple(3, 1)) == (0, 1)
    assert inv_pair(M(3, 1, 3, "RR")) == (0, 3)


@pytest.mark.parametrize("text,expected", [
    ("S2", M(3, 2, 2)),
    ("1-3:RL", M(3, 1, 3, "RL")),
    ("M[2-3:L]", M(3, 2, 3, "L")),
    ('{"p": 1, "q": 2, "word": "R"}', M(3, 1, 2, "R")),
])
def test_parse_module(text, expected):
    assert parse_module(3, text) == expected


@given(modules())
def test_json_and_str_roundtrip(m):
    assert StringModule.from_json(m.n, json.dumps(m.to_json())) == m
    assert parse_module(m.n, str(m)) == m
