"""
Length-positive sets `LP(x) = {v : l(x, v r) >= 0 for every positive root r}`.

At positive level the set is finite and produced by a closed-form case table
on `k mod l`. At level zero it is all of `W` (when `w = e`) or one side of `W`.

>>> from .titscone import parse_element
>>> print(lp_set(parse_element("s1 t[-1] e[1a-1d+1L]")))
{e, s0, s0 s1}
>>> print(lp_set(parse_element("s0 e[0a+2d+0L]")))
RIGHT
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import AffineRoot, is_positive
from .titscone import WTElement, length_functional
from .weyl import (
    IDENTITY, Side, WeylElt, act_root, length, side, to_reduced_word,
)

__all__ = ["LPSet", "lp_set", "lp_contains", "lp_oracle", "lp_witness", "oracle_bound"]


@dataclass(frozen=True, slots=True)
class LPSet:
    """
    Either a finite tuple of elements (positive level), or a symbolic set:
    `side=None` with `elements=None` is all of `W`, otherwise one side.
    """
    elements: tuple[WeylElt, ...] | None = None
    side: Side | None = None

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    @property
    def is_all(self) -> bool:
        return self.elements is None and self.side is None

    def __contains__(self, v: WeylElt) -> bool:
        if self.elements is not None:
            return v in self.elements
        return self.side is None or side(v) in (self.side, Side.BOTH)

    def __str__(self) -> str:
        if self.elements is not None:
            return "{" + ", ".join(str(v) for v in self.elements) + "}"
        return "ALL" if self.side is None else self.side.value

    def to_json(self):
        if self.elements is not None:
            return [str(v) for v in self.elements]
        return str(self)


def _sort_key(v: WeylElt) -> tuple[int, tuple[int, ...]]:
    return length(v), to_reduced_word(v)


def _positive_level(x: WTElement) -> list[WeylElt]:
    k, l = x.mu.k, x.mu.l
    r = x.w.t
    w0_fixes_alpha = 1 if x.w.v0 == 1 else 0
    t = -((l - 2 * k) // (2 * l))
    j = k - t * l
    assert -l < 2 * j <= l

    out = []

    def tau(s: int) -> WeylElt:
        return WeylElt(1, s)

    def tau_s1(s: int) -> WeylElt:
        return WeylElt(-1, -s)

    def tau_s0(s: int) -> WeylElt:
        return WeylElt(-1, -s - 1)

    def tau_s1s0(s: int) -> WeylElt:
        return WeylElt(1, s - 1)

    if 2 <= 2 * j <= l - 1:
        out.append(tau(t))
    if 2 <= -2 * j <= l - 1:
        out.append(tau_s1(t))
    if j == 0:
        if t <= 0 or t >= w0_fixes_alpha - r:
            out.append(tau(t))
        if t >= 1 or t <= w0_fixes_alpha - r - 1:
            out.append(tau_s1(t))
    if 2 * j == l:
        if t >= 0 or t <= -1 - r:
            out.append(tau(t))
        if t <= -1 or t >= -r:
            out.append(tau_s0(t))
    if 2 * j == -(l - 1) and 1 <= t <= -r:
        out.append(tau_s1s0(t))
    if 2 * j == l - 1 and -r <= t <= -1:
        out.append(tau_s0(t))
    return out


def lp_set(x: WTElement) -> LPSet:
    if x.level > 0:
        return LPSet(elements=tuple(sorted(set(_positive_level(x)), key=_sort_key)))
    word = to_reduced_word(x.w)
    if not word:
        return LPSet()
    # v with s_i v > v for the last letter s_i of w: v must not start with s_i
    return LPSet(side=Side.LEFT if word[-1] == 1 else Side.RIGHT)


def lp_witness(x: WTElement) -> WeylElt:
    """Some element of `LP(x)`; the identity at level zero."""
    if x.level == 0:
        return IDENTITY
    return lp_set(x).elements[0]


def lp_contains(x: WTElement, v: WeylElt) -> bool:
    return v in lp_set(x)


def oracle_bound(x: WTElement, v: WeylElt) -> int:
    """Root window beyond which every functional `l(x, v r)` is nonnegative."""
    return 2 * abs(x.mu.k) + 2 * abs(v.t) + x.level + 2


def lp_oracle(x: WTElement, v: WeylElt, n_bound: int | None = None) -> bool:
    """Brute-force membership: test every positive `r` with `|n| <= n_bound`."""
    need = oracle_bound(x, v)
    if n_bound is None:
        n_bound = need
    elif n_bound < need:
        raise ValueError(f"n_bound must be at least {need}")
    for n in range(0, n_bound + 1):
        for eps in (1, -1):
            r = AffineRoot(eps, n)
            if is_positive(r) and length_functional(x, act_root(v, r)) < 0:
                return False
    return True
