from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dademazure.roots import Coweight, two_rho_pair
from dademazure.qbg import (
    EdgeKind, QbgPath, bfs_distances, distance, edges_from, shortest_path_weights,
    shortest_paths, weight,
)
from dademazure.weyl import IDENTITY, bruhat_leq, elements_up_to, length, mul, parse_word

WINDOW = list(elements_up_to(8))
window_elts = st.sampled_from(WINDOW)


def test_identity_has_only_upward_edges():
    edges = edges_from(IDENTITY, 4)
    assert {e.dst for e in edges} == {parse_word("s0"), parse_word("s1")}
    assert all(e.kind is EdgeKind.BRUHAT for e in edges)


@pytest.mark.parametrize("src, dst, wt", [
    ("s1 s0", "s1", Coweight(-1, 1, 0)),
    ("s0 s1", "s0", Coweight(1, 0, 0)),
])
def test_quantum_edges(src, dst, wt):
    quantum = [e for e in edges_from(parse_word(src), 4) if e.kind is EdgeKind.QUANTUM]
    assert len(quantum) == 1
    assert quantum[0].dst == parse_word(dst)
    assert quantum[0].weight == wt


@given(window_elts, st.integers(1, 12))
def test_edge_invariants(v, bound):
    for e in edges_from(v, bound):
        assert e.src == v
        if e.kind is EdgeKind.BRUHAT:
            assert length(e.dst) == length(v) + 1
            assert e.weight == Coweight()
        else:
            assert length(e.dst) == length(v) - 1
            assert length(e.dst) == length(v) + 1 - two_rho_pair(e.weight)


def test_edges_from_requires_bound():
    with pytest.raises(ValueError):
        edges_from(IDENTITY, 0)


def test_distance_examples():
    assert distance(parse_word("s0 s1"), parse_word("s0")) == 1
    assert distance(parse_word("s0"), parse_word("s1")) == 2
    for w in WINDOW:
        assert distance(IDENTITY, w) == length(w)


def test_weight_examples():
    assert weight(parse_word("s0 s1"), parse_word("s0")) == Coweight(1, 0, 0)
    assert weight(parse_word("s0 s1 s0"), parse_word("s0")) == Coweight(0, 1, 0)
    for w in WINDOW:
        assert weight(w, w) == Coweight()


def test_shortest_path_examples():
    (path,) = shortest_paths(IDENTITY, parse_word("s0"))
    assert path.len == 1 and path.edges[0].kind is EdgeKind.BRUHAT
    assert {p.wt for p in shortest_paths(parse_word("s0 s1"), parse_word("s0"))} == {Coweight(1, 0, 0)}
    paths = shortest_paths(parse_word("s0 s1 s0"), parse_word("s1"))
    assert paths and len({p.wt for p in paths}) == 1


def test_closed_forms_match_bfs_everywhere():
    for u, v in itertools.product(WINDOW, WINDOW):
        assert bfs_distances(u, length(u) + length(v) + 4)[v] == distance(u, v)
        assert {p.wt for p in shortest_paths(u, v)} == {weight(u, v)}
        assert shortest_path_weights(u, v) == {weight(u, v)}


@given(window_elts, window_elts)
def test_weight_height_identity(u, v):
    assert two_rho_pair(weight(u, v)) == distance(u, v) + length(u) - length(v)


@given(window_elts, window_elts)
def test_bruhat_iff_zero_weight(u, v):
    assert bruhat_leq(u, v) == (weight(u, v) == Coweight())


@given(window_elts, window_elts)
def test_shortest_weight_shape(u, v):
    wt = weight(u, v)
    assert wt.l == 0 and wt.k in (-1, 0, 1)


@given(window_elts, window_elts, window_elts)
def test_triangle_inequality(a, b, c):
    assert distance(a, c) <= distance(a, b) + distance(b, c)


def test_path_must_be_consecutive():
    e1 = next(iter(edges_from(IDENTITY, 1)))
    with pytest.raises(ValueError):
        QbgPath((e1, e1))


@given(window_elts)
def test_upward_edges_reach_both_covers(v):
    covers = {w for w in elements_up_to(length(v) + 1) if length(w) == length(v) + 1}
    up = {e.dst for e in edges_from(v, length(v) + 1) if e.kind is EdgeKind.BRUHAT}
    assert up == covers


def test_small_bound_misses_far_covers():
    v = parse_word("s0 s1 s0")
    far = parse_word("s1 s0 s1 s0")
    assert far not in {e.dst for e in edges_from(v, 1)}
    assert far in {e.dst for e in edges_from(v, 4)}
