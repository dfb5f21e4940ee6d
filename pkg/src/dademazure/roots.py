"""
Real affine roots and coweights of affine SL_2.

A real root is `eps*a + n*d` with `eps` in {+1, -1}; a coweight is
`k*av + m*d + l*L` (coroot of `a`, the central coweight, and the level-one
fundamental coweight). All arithmetic is exact over the integers.

>>> pair(Coweight(-1, 0, 1), AffineRoot(-1, 1))
3
>>> coroot(AffineRoot(-1, 1))
Coweight(k=-1, m=1, l=0)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "AffineRoot", "Coweight", "DoubleAffineRoot",
    "ALPHA", "ALPHA0", "SIMPLE_ROOTS",
    "pair", "two_rho_pair", "negate", "coroot", "is_positive", "is_simple",
    "parse_root", "parse_coweight",
]


@dataclass(frozen=True, slots=True, order=True)
class AffineRoot:
    """The real root `eps*a + n*d`."""
    eps: int
    n: int

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps}")

    def __neg__(self) -> AffineRoot:
        return AffineRoot(-self.eps, -self.n)

    def __str__(self) -> str:
        head = "a" if self.eps == 1 else "-a"
        if self.n == 0:
            return head
        if abs(self.n) == 1:
            return f"{head}{'+' if self.n > 0 else '-'}d"
        return f"{head}{self.n:+d}d"


@dataclass(frozen=True, slots=True)
class Coweight:
    """The coweight `k*av + m*d + l*L`; `l` is the level."""
    k: int = 0
    m: int = 0
    l: int = 0

    def __add__(self, other: Coweight) -> Coweight:
        return Coweight(self.k + other.k, self.m + other.m, self.l + other.l)

    def __sub__(self, other: Coweight) -> Coweight:
        return Coweight(self.k - other.k, self.m - other.m, self.l - other.l)

    def __neg__(self) -> Coweight:
        return Coweight(-self.k, -self.m, -self.l)

    def __mul__(self, c: int) -> Coweight:
        return Coweight(c * self.k, c * self.m, c * self.l)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.k}a{self.m:+d}d{self.l:+d}L"

    def as_list(self) -> list[int]:
        return [self.k, self.m, self.l]


@dataclass(frozen=True, slots=True)
class DoubleAffineRoot:
    """The double affine root `base + m_pi*pi`."""
    base: AffineRoot
    m_pi: int

    @property
    def is_positive(self) -> bool:
        return self.m_pi >= 1 or (self.m_pi == 0 and is_positive(self.base))

    def __neg__(self) -> DoubleAffineRoot:
        return DoubleAffineRoot(-self.base, -self.m_pi)

    def __str__(self) -> str:
        return f"{self.base}{self.m_pi:+d}pi"


ALPHA = AffineRoot(1, 0)    # simple root of s1
ALPHA0 = AffineRoot(-1, 1)  # simple root of s0
SIMPLE_ROOTS = {0: ALPHA0, 1: ALPHA}


def pair(mu: Coweight, r: AffineRoot) -> int:
    """
    The pairing of a coweight with a real root.

    `<av, a> = 2`, `<L, d> = 1`, and the central coweight pairs to zero with
    every real root.
    """
    return 2 * r.eps * mu.k + r.n * mu.l


def two_rho_pair(mu: Coweight) -> int:
    """
    Pairing with `2*rho`: `<2rho, av> = 2`, `<2rho, d> = 4`, `<2rho, L> = 0`.

    The value on `d` is twice the dual Coxeter number; it is the only choice
    making the length of a semigroup element independent of the chosen
    length-positive element.

    >>> two_rho_pair(Coweight(1, 1, 1))
    6
    """
    return 2 * mu.k + 4 * mu.m


def negate(r: AffineRoot) -> AffineRoot:
    return -r


def coroot(r: AffineRoot) -> Coweight:
    """Coroot of `eps*a + n*d`, namely `eps*av + n*d`."""
    return Coweight(r.eps, r.n, 0)


def is_positive(r: AffineRoot) -> bool:
    return r.n >= 1 or (r.n == 0 and r.eps == 1)


def is_simple(r: AffineRoot) -> bool:
    return r == ALPHA or r == ALPHA0


_ROOT_RE = re.compile(r"^([+-]?)a(?:([+-])(\d*)d)?$")


def parse_root(text: str) -> AffineRoot:
    """
    Parse `a`, `-a+d`, `a+2d`, `-a-3d`, ...

    >>> parse_root("-a+2d")
    AffineRoot(eps=-1, n=2)
    """
    match = _ROOT_RE.match(text.replace(" ", ""))
    if not match:
        raise ValueError(f"not a real root: {text!r}")
    sign, nsign, digits = match.groups()
    eps = -1 if sign == "-" else 1
    n = 0
    if nsign:
        n = int(digits) if digits else 1
        if nsign == "-":
            n = -n
    return AffineRoot(eps, n)


# one term: optional sign, optional integer, optional '*', then a basis symbol
_TERM_RE = re.compile(r"([+-]?)(\d*)\*?(av|a|d|L)")


def parse_coweight(text: str) -> Coweight:
    """
    Parse a coweight such as `-1a+0d+1L` or `2*av - d + 3*L`.

    Basis symbols may appear in any order; repeated symbols accumulate.

    >>> parse_coweight("-1a+4d+2L")
    Coweight(k=-1, m=4, l=2)
    >>> parse_coweight("2*av - d + 3*L")
    Coweight(k=2, m=-1, l=3)
    """
    compact = text.replace(" ", "")
    if not compact or compact == "0":
        return Coweight()
    coeffs = {"a": 0, "d": 0, "L": 0}
    pos = 0
    for match in _TERM_RE.finditer(compact):
        if match.start() != pos or (pos > 0 and not match.group(1)):
            raise ValueError(f"bad coweight {text!r} near position {pos}")
        sign, digits, sym = match.groups()
        c = int(digits) if digits else 1
        coeffs[sym[0]] += -c if sign == "-" else c
        pos = match.end()
    if pos != len(compact):
        raise ValueError(f"bad coweight {text!r} near position {pos}")
    return Coweight(coeffs["a"], coeffs["d"], coeffs["L"])
