"""
The infinite dihedral group `W = <s0, s1>`, the affine Weyl group of SL_2.

Elements are kept in the normal form `v0 * tau^(t*av)` with `v0` in {e, s1},
stored as a sign (`+1` for e, `-1` for s1) and the integer `t`. The two
presentations are linked by `s0 = s1 * tau^(-av)`.

>>> from_word([0, 1])
WeylElt(v0=1, t=1)
>>> to_reduced_word(WeylElt(-1, -2))
(0, 1, 0)
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .roots import AffineRoot, Coweight, SIMPLE_ROOTS, is_positive

__all__ = [
    "WeylElt", "Side", "IDENTITY", "S0", "S1", "GENERATORS",
    "from_word", "to_reduced_word", "from_reduced", "mul", "inv", "length",
    "act_root", "act_coweight", "inversion_set", "inversion_set_brute",
    "bruhat_leq", "side", "reflection", "reflection_root", "elements_up_to",
    "parse_word", "format_word",
]


@dataclass(frozen=True, slots=True)
class WeylElt:
    """The element `v0 * tau^(t*av)`; `v0` is +1 for e and -1 for s1."""
    v0: int
    t: int

    def __post_init__(self):
        if self.v0 not in (1, -1):
            raise ValueError(f"v0 must be +1 (e) or -1 (s1), got {self.v0}")

    def __mul__(self, other: WeylElt) -> WeylElt:
        return mul(self, other)

    def __str__(self) -> str:
        return format_word(to_reduced_word(self))


class Side(enum.Enum):
    LEFT = "LEFT"    # s1*w > w: reduced word starts with s0
    RIGHT = "RIGHT"  # s0*w > w: reduced word starts with s1
    BOTH = "BOTH"    # the identity only


IDENTITY = WeylElt(1, 0)
S1 = WeylElt(-1, 0)
S0 = WeylElt(-1, -1)
GENERATORS = {0: S0, 1: S1}


def mul(a: WeylElt, b: WeylElt) -> WeylElt:
    # v0 tau^t u0 tau^s = v0 u0 tau^(sgn(u0) t + s)
    return WeylElt(a.v0 * b.v0, b.v0 * a.t + b.t)


def inv(a: WeylElt) -> WeylElt:
    return WeylElt(a.v0, -a.v0 * a.t)


def length(a: WeylElt) -> int:
    if a.v0 == 1:
        return 2 * abs(a.t)
    return 2 * a.t + 1 if a.t >= 0 else -2 * a.t - 1


def from_word(letters: Iterable[int]) -> WeylElt:
    """Multiply generators left to right; letters are 0 (s0) and 1 (s1)."""
    w = IDENTITY
    for i in letters:
        w = mul(w, GENERATORS[i])
    return w


def from_reduced(first: int, n: int) -> WeylElt:
    """The element whose reduced word alternates, starts with `first`, has length `n`."""
    if n == 0:
        return IDENTITY
    if first == 0:
        return WeylElt(1, n // 2) if n % 2 == 0 else WeylElt(-1, -(n + 1) // 2)
    return WeylElt(1, -(n // 2)) if n % 2 == 0 else WeylElt(-1, (n - 1) // 2)


def _first_letter(a: WeylElt) -> int | None:
    if a == IDENTITY:
        return None
    if a.v0 == 1:
        return 0 if a.t > 0 else 1
    return 1 if a.t >= 0 else 0


def to_reduced_word(a: WeylElt) -> tuple[int, ...]:
    first = _first_letter(a)
    if first is None:
        return ()
    return tuple((first + i) % 2 for i in range(length(a)))


def side(w: WeylElt) -> Side:
    first = _first_letter(w)
    if first is None:
        return Side.BOTH
    return Side.LEFT if first == 0 else Side.RIGHT


def bruhat_leq(a: WeylElt, b: WeylElt) -> bool:
    # valid for the infinite dihedral group only
    return a == b or length(a) < length(b)


def act_root(w: WeylElt, r: AffineRoot) -> AffineRoot:
    """`v0 tau^(t av)(eps a + n d) = eps v0(a) + (n - 2 eps t) d`."""
    return AffineRoot(w.v0 * r.eps, r.n - 2 * r.eps * w.t)


def act_coweight(w: WeylElt, mu: Coweight) -> Coweight:
    """
    Level-preserving action on coweights.

    `v0 tau^lam (mu0 + m d + l L) = v0 mu0 + l v0 lam
    + (m - <mu0, lam> - l/2 <lam, lam>) d + l L`, with `<av, av> = 2`.

    >>> act_coweight(inv(from_word([0, 1])), Coweight(0, 1, 1))
    Coweight(k=-1, m=0, l=1)
    """
    t = w.t
    return Coweight(
        w.v0 * (mu.k + mu.l * t),
        mu.m - 2 * mu.k * t - mu.l * t * t,
        mu.l,
    )


def reflection(r: AffineRoot) -> WeylElt:
    """The reflection `s_r`; `s_(eps a + n d) = s1 tau^(eps n av)`."""
    return WeylElt(-1, r.eps * r.n)


def reflection_root(w: WeylElt) -> AffineRoot:
    """The positive root of a reflection (an element with `v0 = s1`)."""
    if w.v0 != -1:
        raise ValueError(f"{w} is not a reflection")
    return AffineRoot(1, w.t) if w.t >= 0 else AffineRoot(-1, -w.t)


def inversion_set(w: WeylElt) -> frozenset[AffineRoot]:
    """
    `{r > 0 : w(r) < 0}` from a reduced word `s_i1 ... s_ik`:
    the roots `s_ik ... s_i(j+1) (a_ij)`.
    """
    word = to_reduced_word(w)
    roots = set()
    suffix = IDENTITY
    for i in reversed(word):
        roots.add(act_root(suffix, SIMPLE_ROOTS[i]))
        suffix = mul(suffix, GENERATORS[i])
    return frozenset(roots)


def inversion_set_brute(w: WeylElt) -> frozenset[AffineRoot]:
    """Same set by testing `w(r) < 0` over positive roots with `|n| <= length(w)`."""
    bound = length(w)
    return frozenset(
        r
        for n in range(-bound, bound + 1)
        for r in (AffineRoot(1, n), AffineRoot(-1, n))
        if is_positive(r) and not is_positive(act_root(w, r))
    )


def elements_up_to(max_length: int) -> Iterator[WeylElt]:
    """All elements of length at most `max_length`, by increasing length."""
    yield IDENTITY
    for n in range(1, max_length + 1):
        yield from_reduced(0, n)
        yield from_reduced(1, n)


_TOKEN_RE = re.compile(r"s0|s1|e|t\[\s*(-?\d+)\s*\]")


def parse_word(text: str) -> WeylElt:
    """
    Parse a whitespace-separated product of `s0`, `s1`, `e` and `t[<int>]`
    (the translation `tau^(<int> av)`), or the normal form `(v0=e|s1, t=<int>)`.

    >>> parse_word("s1 t[-1]")
    WeylElt(v0=-1, t=-1)
    >>> parse_word("(v0=s1, t=2)")
    WeylElt(v0=-1, t=2)
    """
    text = text.strip()
    nf = re.fullmatch(r"\(\s*v0\s*=\s*(e|s1)\s*,\s*t\s*=\s*(-?\d+)\s*\)", text)
    if nf:
        return WeylElt(1 if nf.group(1) == "e" else -1, int(nf.group(2)))
    w = IDENTITY
    for token in text.split():
        match = _TOKEN_RE.fullmatch(token)
        if not match:
            raise ValueError(f"unknown word token {token!r}")
        if token == "s0":
            w = mul(w, S0)
        elif token == "s1":
            w = mul(w, S1)
        elif token.startswith("t"):
            w = mul(w, WeylElt(1, int(match.group(1))))
    return w


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"s{i}" for i in word) if word else "e"
