"""
The quantum Bruhat graph of the infinite dihedral group.

Production code uses the closed forms `distance` and `weight`. The explicit
graph (`edges_from`) and the breadth-first search below exist as an
independent oracle for them.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .roots import AffineRoot, Coweight, SIMPLE_ROOTS, coroot, two_rho_pair
from .weyl import (
    WeylElt, bruhat_leq, elements_up_to, length, mul, reflection,
    to_reduced_word,
)

__all__ = [
    "EdgeKind", "QbgEdge", "QbgPath", "TruncationTooSmall",
    "edges_from", "distance", "weight", "is_prefix",
    "bfs_distances", "shortest_paths", "shortest_path_weights",
]


class EdgeKind(enum.Enum):
    BRUHAT = "Bruhat"
    QUANTUM = "Quantum"


class TruncationTooSmall(RuntimeError):
    """A shortest path reached the truncation cap of the finite window."""


@dataclass(frozen=True, slots=True)
class QbgEdge:
    src: WeylElt
    dst: WeylElt
    kind: EdgeKind
    root: AffineRoot
    weight: Coweight

    def to_json(self) -> dict:
        return {
            "src": str(self.src),
            "dst": str(self.dst),
            "kind": self.kind.value,
            "weight": self.weight.as_list(),
        }


@dataclass(frozen=True, slots=True)
class QbgPath:
    edges: tuple[QbgEdge, ...]

    def __post_init__(self):
        for e1, e2 in zip(self.edges, self.edges[1:]):
            if e1.dst != e2.src:
                raise ValueError("edges are not consecutive")

    @property
    def len(self) -> int:
        return len(self.edges)

    @property
    def wt(self) -> Coweight:
        total = Coweight()
        for e in self.edges:
            total = total + e.weight
        return total


def edges_from(v: WeylElt, bound: int) -> set[QbgEdge]:
    """
    All edges `v -> v s_r` for positive real roots `r` with `|n| <= bound`.

    Bruhat edges raise the length by one; quantum edges satisfy
    `l(v s_r) = l(v) + 1 - <2rho, r^vee>` and carry weight `r^vee`.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    out = set()
    lv = length(v)
    for n in range(0, bound + 1):
        for r in (AffineRoot(1, n), AffineRoot(-1, n)):
            if n == 0 and r.eps == -1:
                continue
            dst = mul(v, reflection(r))
            ld = length(dst)
            if ld == lv + 1:
                out.add(QbgEdge(v, dst, EdgeKind.BRUHAT, r, Coweight()))
            elif ld == lv + 1 - two_rho_pair(coroot(r)):
                out.add(QbgEdge(v, dst, EdgeKind.QUANTUM, r, coroot(r)))
    return out


def is_prefix(v: WeylElt, u: WeylElt) -> bool:
    """True when the reduced word of `v` is a prefix of that of `u`."""
    wv, wu = to_reduced_word(v), to_reduced_word(u)
    return wu[:len(wv)] == wv


def distance(u: WeylElt, v: WeylElt) -> int:
    """Length of a shortest path `u => v`."""
    lu, lv = length(u), length(v)
    if bruhat_leq(u, v):
        return lv - lu
    if is_prefix(v, u):
        # u >= v and same-sided: straight vertical descent
        return lu - lv
    return abs(lu - lv) + 2


def weight(u: WeylElt, v: WeylElt) -> Coweight:
    """
    Common weight of all shortest paths `u => v`.

    Quantum edges strip the last letter of the reduced word. A shortest path
    either climbs only (weight 0), descends vertically to `v`, or descends to
    length `l(v) - 1` and then takes one weight-zero diagonal step up.
    """
    if bruhat_leq(u, v):
        return Coweight()
    word = to_reduced_word(u)
    stop = length(v) if is_prefix(v, u) else length(v) - 1
    total = Coweight()
    for i in word[stop:]:
        total = total + coroot(SIMPLE_ROOTS[i])
    return total


def _window(u: WeylElt, v: WeylElt) -> int:
    return length(u) + length(v) + 4


@lru_cache(maxsize=64)
def _adjacency(cap: int) -> dict[WeylElt, tuple[QbgEdge, ...]]:
    # a Bruhat edge between lengths <= cap reflects in a root with |n| <= cap + 1
    return {
        w: tuple(e for e in edges_from(w, cap + 1) if length(e.dst) <= cap)
        for w in elements_up_to(cap)
    }


def bfs_distances(u: WeylElt, cap: int) -> dict[WeylElt, int]:
    """Breadth-first distances from `u` in the graph truncated at length `cap`."""
    adj = _adjacency(cap)
    dist = {u: 0}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for e in adj[w]:
            if e.dst not in dist:
                dist[e.dst] = dist[w] + 1
                queue.append(e.dst)
    return dist


def _shortest_dag(u: WeylElt, v: WeylElt):
    """Edges lying on some shortest path `u => v`, with distances from `u`."""
    cap = _window(u, v)
    adj = _adjacency(cap)
    dist = {u: 0}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for e in adj[w]:
            if e.dst not in dist:
                dist[e.dst] = dist[w] + 1
                queue.append(e.dst)
    if v not in dist:
        raise TruncationTooSmall(f"{v} unreachable from {u} within length {cap}")

    rev: dict[WeylElt, list[QbgEdge]] = {}
    for edges in adj.values():
        for e in edges:
            rev.setdefault(e.dst, []).append(e)
    back = {v: 0}
    queue = deque([v])
    while queue:
        w = queue.popleft()
        for e in rev.get(w, ()):
            if e.src not in back:
                back[e.src] = back[w] + 1
                queue.append(e.src)

    target = dist[v]
    dag = {
        w: [e for e in adj[w] if dist[w] + 1 + back.get(e.dst, target + 1) == target]
        for w in dist if dist[w] + back.get(w, target + 1) == target
    }
    if any(length(w) >= cap for w in dag):
        raise TruncationTooSmall(f"shortest path {u} => {v} touches length {cap}")
    return dag, dist, target


def shortest_paths(u: WeylElt, v: WeylElt) -> list[QbgPath]:
    """Enumerate every shortest path `u => v` in the truncated graph."""
    dag, _, _ = _shortest_dag(u, v)
    paths: list[QbgPath] = []

    def extend(w: WeylElt, acc: list[QbgEdge]) -> None:
        if w == v:
            paths.append(QbgPath(tuple(acc)))
            return
        for e in dag[w]:
            acc.append(e)
            extend(e.dst, acc)
            acc.pop()

    extend(u, [])
    return paths


def shortest_path_weights(u: WeylElt, v: WeylElt) -> set[Coweight]:
    """The set of weights over all shortest paths, without listing the paths."""
    dag, dist, _ = _shortest_dag(u, v)
    reach: dict[WeylElt, set[Coweight]] = {u: {Coweight()}}
    for w in sorted(dag, key=dist.__getitem__):
        for e in dag[w]:
            reach.setdefault(e.dst, set()).update(c + e.weight for c in reach[w])
    return reach[v]
