from __future__ import annotations

import pytest
from hypothesis import given, settings

from dademazure.demazure import (
    additivity_equiv_check, assoc_check, dem_product, is_length_additive,
    lp_of_product_check, min_pairs, product_via,
)
from dademazure.lp import lp_set
from dademazure.qbg import distance, shortest_path_weights
from dademazure.roots import Coweight
from dademazure.titscone import (
    ONE, daf_inversions_intersection, parse_element, wt_length, wt_mul,
)
from dademazure.weyl import IDENTITY, mul, parse_word

from conftest import elements

X1 = parse_element("s0 s1 e[-1a+0d+1L]")
Y1 = parse_element("e e[0a+4d+1L]")
X2 = parse_element("s0 s1 s0 e[2a-4d+1L]")
Y2 = parse_element("s0 e[1a-1d+1L]")
S1 = parse_word("s1")


def test_additive_example():
    mp = min_pairs(X1, Y1)
    assert mp.pairs == ((S1, S1),) and mp.dist == 0
    res = dem_product(X1, Y1)
    assert res.product == parse_element("s0 s1 e[-1a+4d+2L]") == wt_mul(X1, Y1)
    assert is_length_additive(X1, Y1)
    assert additivity_equiv_check(X1, Y1)
    assert set(lp_set(res.product).elements) == {S1}
    assert lp_of_product_check(X1, Y1)


def test_defect_one_example():
    mp = min_pairs(X2, Y2)
    assert (parse_word("s0 s1"), IDENTITY) in mp.pairs and mp.dist == 1
    res = dem_product(X2, Y2)
    assert res.product == parse_element("s1 t[-1] e[1a-2d+2L]")
    assert res.defect == 1
    assert wt_length(res.product) == wt_length(X2) + wt_length(Y2) - 1
    assert not is_length_additive(X2, Y2)
    assert additivity_equiv_check(X2, Y2)


def test_identity_pair():
    mp = min_pairs(ONE, ONE)
    assert mp.dist == 0 and (IDENTITY, IDENTITY) in mp.pairs
    assert dem_product(ONE, ONE).product == ONE


@given(elements())
def test_identity_factor(x):
    assert dem_product(x, ONE).product == x
    assert dem_product(ONE, x).product == x
    assert is_length_additive(ONE, x)


@given(elements(), elements())
def test_minimising_pairs_are_valid(x, y):
    mp = min_pairs(x, y)
    lx, ly = lp_set(x), lp_set(y)
    assert mp.pairs
    for u, v in mp.pairs:
        assert u in lx and v in ly
        assert distance(u, mul(y.w, v)) == mp.dist


@given(elements(), elements())
def test_product_independent_of_pair_and_path(x, y):
    res = dem_product(x, y)
    for u, v in res.pairs.pairs:
        for wt in shortest_path_weights(u, mul(y.w, v)):
            assert product_via(x, y, u, v, wt) == res.product


@given(elements(), elements())
def test_length_formula(x, y):
    res = dem_product(x, y)
    assert wt_length(res.product) == wt_length(x) + wt_length(y) - res.defect


@given(elements(min_level=1), elements(min_level=1))
def test_lp_of_product(x, y):
    assert lp_of_product_check(x, y)


@given(elements(), elements())
def test_additivity_equivalences(x, y):
    assert additivity_equiv_check(x, y)
    assert is_length_additive(x, y) == (not daf_inversions_intersection(x, y))


@given(elements(), elements())
def test_product_stays_in_the_cone(x, y):
    prod = dem_product(x, y).product
    assert prod.level == x.level + y.level


@settings(max_examples=60)
@given(elements(min_level=2), elements(min_level=2), elements(min_level=2))
def test_associative_at_level_two(x, y, z):
    assert assoc_check(x, y, z)


@given(elements())
def test_identity_triple(x):
    assert assoc_check(x, ONE, ONE)
    assert assoc_check(ONE, x, ONE)


@given(elements(min_level=2))
def test_unique_nearest_element(x):
    lp = lp_set(x).elements
    for u in (IDENTITY, S1, parse_word("s0 s1 s0"), parse_word("s1 s0 s1 s0 s1")):
        to = [distance(u, v) for v in lp]
        fro = [distance(v, u) for v in lp]
        assert to.count(min(to)) == 1
        assert fro.count(min(fro)) == 1


def test_nearest_element_can_tie_for_three_element_sets():
    # LP = {e, s0, s0 s1}: s1 reaches e by a quantum edge and s0 s1 by a Bruhat edge
    x = parse_element("s0 e[1a+0d+1L]")
    lp = lp_set(x).elements
    assert lp == (IDENTITY, parse_word("s0"), parse_word("s0 s1"))
    assert [distance(S1, v) for v in lp] == [1, 2, 1]
    assert [distance(v, S1) for v in lp] == [1, 2, 3]


@pytest.mark.parametrize("x, y", [
    (parse_element("s0 e[0a+2d+0L]"), parse_element("s1 e[0a-1d+0L]")),
    (parse_element("s0 e[0a+2d+0L]"), parse_element("s0 s1 e[0a+0d+0L]")),
    (parse_element("s1 s0 e[0a+0d+0L]"), parse_element("e e[0a+0d+0L]")),
])
def test_level_zero_pairs(x, y):
    res = dem_product(x, y)
    assert res.defect == (0 if is_length_additive(x, y) else 1)
    assert wt_length(res.product) == wt_length(x) + wt_length(y) - res.defect
    assert res.product.level == 0


def test_level_zero_factor_against_finite():
    x = parse_element("s0 s1 s0 e[0a+1d+0L]")
    y = parse_element("s1 e[2a+0d+3L]")
    res = dem_product(x, y)
    assert res.v_weight.l == 0
    assert additivity_equiv_check(x, y)
    assert wt_length(res.product) == wt_length(x) + wt_length(y) - res.defect


def test_json():
    data = dem_product(X2, Y2).to_json()
    assert data["product"] == "s0 e[1a-2d+2L]"
    assert data["dist"] == 1
    assert data["pairs"] == [["s0 s1", "e"]]
    assert data["v_weight"] == Coweight(1, 0, 0).as_list()
