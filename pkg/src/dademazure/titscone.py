"""
Elements `w * eps^mu` of the double affine Weyl semigroup `W_T = W x| T`.

`T` is the Tits cone: coweights of positive level together with `Z*d`. The
product follows `eps^mu w = w eps^(w^-1 mu)`.

>>> x = parse_element("s0 s1 e[-1a+0d+1L]")
>>> y = parse_element("e e[0a+4d+1L]")
>>> print(wt_mul(x, y))
s0 s1 e[-1a+4d+2L]
>>> wt_length(x), wt_length(y)
(2, 16)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .roots import (
    AffineRoot, Coweight, DoubleAffineRoot, is_positive, pair, two_rho_pair,
)
from .weyl import (
    IDENTITY, WeylElt, act_coweight, act_root, inv, inversion_set, length, mul,
    parse_word, to_reduced_word, format_word,
)

__all__ = [
    "WTElement", "OutsideTitsCone", "BoundOverflow", "ParseError",
    "in_tits_cone", "wt_mul", "length_functional", "wt_length",
    "wt_length_via_inversions", "translation_length_via_roots", "daf_act",
    "daf_act_inverse", "daf_inversions_intersection", "parse_element",
    "format_element", "ONE",
]


class OutsideTitsCone(ValueError):
    """A coweight that is neither of positive level nor a multiple of `d`."""


class BoundOverflow(RuntimeError):
    """An enumeration box grew beyond its configured cap."""


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def in_tits_cone(mu: Coweight) -> bool:
    return mu.l > 0 or (mu.l == 0 and mu.k == 0)


@dataclass(frozen=True, slots=True)
class WTElement:
    """The semigroup element `w * eps^mu`."""
    w: WeylElt
    mu: Coweight

    def __post_init__(self):
        if not in_tits_cone(self.mu):
            raise OutsideTitsCone(f"{self.mu} is outside the Tits cone")

    @property
    def level(self) -> int:
        return self.mu.l

    def __mul__(self, other: WTElement) -> WTElement:
        return wt_mul(self, other)

    def __str__(self) -> str:
        return format_element(self)

    def to_json(self) -> dict:
        return {
            "w": format_word(to_reduced_word(self.w)),
            "mu": self.mu.as_list(),
            "level": self.level,
            "length": wt_length(self),
        }


ONE = WTElement(IDENTITY, Coweight())


def wt_mul(x: WTElement, y: WTElement) -> WTElement:
    return WTElement(mul(x.w, y.w), act_coweight(inv(y.w), x.mu) + y.mu)


def length_functional(x: WTElement, r: AffineRoot) -> int:
    """`<mu, r> + [r > 0] - [w r > 0]`."""
    return pair(x.mu, r) + is_positive(r) - is_positive(act_root(x.w, r))


def wt_length(x: WTElement) -> int:
    """
    Length of `x` from any length-positive `u`:
    `<u^-1 mu, 2rho> - l(u) + l(w u)`.

    Translations by `d` have positive length, `l(eps^(m d)) = 4m`, so the
    value is negative for `m < 0` at level zero.
    """
    from .lp import lp_witness  # lp depends on this module

    u = lp_witness(x)
    return two_rho_pair(act_coweight(inv(u), x.mu)) - length(u) + length(mul(x.w, u))


def translation_length_via_roots(mu: Coweight, u: WeylElt) -> int:
    """
    `l(eps^mu) = 2 ht(u^-1 mu) + 2 #{r > 0 : <mu, u r> = -1}` for `u`
    length-positive for some element with translation part `mu`.
    """
    if mu.l == 0:
        return two_rho_pair(act_coweight(inv(u), mu))
    # <mu, u r> = -1 forces |n(u r)| <= 2|k| + 1, hence |n(r)| <= that + 2|t_u|
    bound = 2 * abs(mu.k) + 2 * abs(u.t) + 3
    hits = 0
    for n in range(-bound, bound + 1):
        for eps in (1, -1):
            r = AffineRoot(eps, n)
            if is_positive(r) and pair(mu, act_root(u, r)) == -1:
                if abs(n) == bound:
                    raise BoundOverflow(f"root {r} on the enumeration boundary")
                hits += 1
    return two_rho_pair(act_coweight(inv(u), mu)) + 2 * hits


def wt_length_via_inversions(x: WTElement) -> int:
    """
    Length as `l(eps^mu)` corrected by the inversions of `w`: plus one per
    inversion `r` with `<mu, r> >= 0`, minus one per inversion with `<mu, r> < 0`.
    """
    from .lp import lp_witness

    total = translation_length_via_roots(x.mu, lp_witness(x))
    for r in inversion_set(x.w):
        total += 1 if pair(x.mu, r) >= 0 else -1
    return total


def daf_act(x: WTElement, b: DoubleAffineRoot) -> DoubleAffineRoot:
    """`w eps^mu (r + m pi) = w(r) + (m - <mu, r>) pi`."""
    return DoubleAffineRoot(act_root(x.w, b.base), b.m_pi - pair(x.mu, b.base))


def daf_act_inverse(y: WTElement, b: DoubleAffineRoot) -> DoubleAffineRoot:
    """The formal inverse `eps^-mu w^-1` applied to `b`."""
    base = act_root(inv(y.w), b.base)
    return DoubleAffineRoot(base, b.m_pi + pair(y.mu, base))


def daf_inversions_intersection(
    x: WTElement, y: WTElement, cap: int = 10_000,
) -> frozenset[DoubleAffineRoot]:
    """
    Positive double affine roots made negative by both `x` and `y^-1`.

    With `b = r + m pi`, positivity and the two negativity conditions give
    `0 <= m <= min(<mu_x, r>, -<mu_y, y.w^-1 r>)`, which bounds the
    delta-index of `r` from below through `x` and from above through `y`.
    """
    t_inv = inv(y.w).t
    lo = -2 * abs(x.mu.k) if x.level > 0 else -length(x.w) - 1
    hi = 2 * abs(y.mu.k) + 2 * abs(t_inv) if y.level > 0 else length(y.w) + 1
    lo, hi = lo - 2, hi + 2
    found = set()
    candidates = 0
    for n in range(lo, hi + 1):
        for eps in (1, -1):
            r = AffineRoot(eps, n)
            top = min(pair(x.mu, r), -pair(y.mu, act_root(inv(y.w), r)))
            for m in range(0, top + 1):
                candidates += 1
                if candidates > cap:
                    raise BoundOverflow(f"more than {cap} candidates")
                b = DoubleAffineRoot(r, m)
                if not b.is_positive:
                    continue
                if daf_act(x, b).is_positive or daf_act_inverse(y, b).is_positive:
                    continue
                if n in (lo, hi):
                    raise BoundOverflow(f"solution {b} on the enumeration boundary")
                found.add(b)
    return frozenset(found)


_COWEIGHT_RE = re.compile(r"\s*([+-]?\d+)\s*a\s*([+-])\s*(\d+)\s*d\s*([+-])\s*(\d+)\s*L\s*")
_ELEMENT_RE = re.compile(r"e\[([^\]]*)\]\s*$")


def parse_element(text: str) -> WTElement:
    """
    Parse `<word> e[<k>a<+|-><m>d<+|-><l>L]`; the word is made of `s0`, `s1`,
    `e` and `t[<int>]`, and may be empty.

    >>> parse_element("s1 t[-1] e[1a-1d+1L]")
    WTElement(w=WeylElt(v0=-1, t=-1), mu=Coweight(k=1, m=-1, l=1))
    """
    tail = _ELEMENT_RE.search(text)
    if tail is None:
        raise ParseError("expected a trailing 'e[<coweight>]'", len(text.rstrip()))
    body = tail.group(1)
    cw = _COWEIGHT_RE.fullmatch(body)
    if cw is None:
        raise ParseError(f"bad coweight {body!r}", tail.start(1))
    k, sm, m, sl, l = cw.groups()
    mu = Coweight(int(k), int(m) * (-1 if sm == "-" else 1), int(l) * (-1 if sl == "-" else 1))

    head = text[:tail.start()]
    for token in re.finditer(r"\S+", head):
        if not re.fullmatch(r"s0|s1|e|t\[-?\d+\]", token.group()):
            raise ParseError(f"unknown word token {token.group()!r}", token.start())
    try:
        return WTElement(parse_word(head), mu)
    except OutsideTitsCone as err:
        raise ParseError(str(err), tail.start(1)) from None


def format_element(x: WTElement) -> str:
    mu = x.mu
    return f"{format_word(to_reduced_word(x.w))} e[{mu.k}a{mu.m:+d}d{mu.l:+d}L]"
