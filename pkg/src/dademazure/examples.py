"""
The two worked products and the two pictured length-positive sets, with
their expected values stored as data for bit-exact regression.

Elements are given as `eps^lam * w` (translation on the left) and converted
to the normal form `w * eps^(w^-1 lam)` before use.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .demazure import dem_product, is_length_additive, min_pairs
from .lp import lp_set
from .qbg import weight
from .roots import Coweight
from .titscone import WTElement, parse_element, wt_length, wt_mul
from .weyl import IDENTITY, mul, parse_word

__all__ = ["GoldenMismatch", "Check", "ExampleReport", "GOLDEN", "run_examples", "left_form"]


class GoldenMismatch(AssertionError):
    def __init__(self, diffs: list[Check]):
        super().__init__("; ".join(f"{d.example}.{d.field}: expected {d.expected}, got {d.actual}" for d in diffs))
        self.diffs = diffs


@dataclass(frozen=True, slots=True)
class Check:
    example: str
    field: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(slots=True)
class ExampleReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def mismatches(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"example": c.example, "field": c.field, "expected": c.expected,
                 "actual": c.actual, "ok": c.ok}
                for c in self.checks
            ],
        }


def left_form(lam: Coweight, word: str) -> WTElement:
    """The element `eps^lam * w`."""
    return wt_mul(WTElement(IDENTITY, lam), WTElement(parse_word(word), Coweight()))


def _set(elements) -> str:
    return "{" + ", ".join(sorted(str(v) for v in elements)) + "}"


GOLDEN = {
    "additive": {
        "x": left_form(Coweight(0, 1, 1), "s0 s1"),
        "y": left_form(Coweight(0, 4, 1), "e"),
        "x_normal": "s0 s1 e[-1a+0d+1L]",
        "LP(x)": "{s1, s1 s0, s1 s0 s1}",
        "LP(y)": "{e, s1}",
        "M": "{(s1, s1)}",
        "dist": "0",
        "additive": "True",
        "x*y": "s0 s1 e[-1a+4d+2L]",
        "x*y == xy": "True",
    },
    "defect_one": {
        "x": left_form(Coweight(0, 0, 1), "s0 s1 s0"),
        "y": left_form(Coweight(0, 0, 1), "s0"),
        "LP(x)": "{s0 s1, s0 s1 s0, s0 s1 s0 s1}",
        "LP(y)": "{e, s0, s0 s1}",
        "additive": "False",
        "(s0 s1, e) in M": "True",
        "dist": "1",
        "wt(s0 s1 => s0)": "1a+0d+0L",
        "x*y": "s0 e[1a-2d+2L]",
        "l(x*y) - l(x) - l(y)": "-1",
    },
    "figure": {
        "LP(t[-1] e[-2a+1d+4L])": "{s1, s1 s0}",
        "LP(s1 t[-1] e[1a-1d+1L])": "{e, s0, s0 s1}",
    },
}


def run_examples(strict: bool = False) -> ExampleReport:
    """Recompute every example and compare with `GOLDEN`; raise on mismatch if `strict`."""
    report = ExampleReport()

    def check(example: str, name: str, actual) -> None:
        report.checks.append(Check(example, name, GOLDEN[example][name], str(actual)))

    g = GOLDEN["additive"]
    x, y = g["x"], g["y"]
    res = dem_product(x, y)
    check("additive", "x_normal", x)
    check("additive", "LP(x)", _set(lp_set(x).elements))
    check("additive", "LP(y)", _set(lp_set(y).elements))
    check("additive", "M", "{" + ", ".join(f"({u}, {v})" for u, v in res.pairs.pairs) + "}")
    check("additive", "dist", res.defect)
    check("additive", "additive", is_length_additive(x, y))
    check("additive", "x*y", res.product)
    check("additive", "x*y == xy", res.product == wt_mul(x, y))

    g = GOLDEN["defect_one"]
    x, y = g["x"], g["y"]
    res = dem_product(x, y)
    check("defect_one", "LP(x)", _set(lp_set(x).elements))
    check("defect_one", "LP(y)", _set(lp_set(y).elements))
    check("defect_one", "additive", is_length_additive(x, y))
    check("defect_one", "(s0 s1, e) in M", (parse_word("s0 s1"), IDENTITY) in min_pairs(x, y).pairs)
    check("defect_one", "dist", res.defect)
    check("defect_one", "wt(s0 s1 => s0)", weight(parse_word("s0 s1"), mul(y.w, IDENTITY)))
    check("defect_one", "x*y", res.product)
    check("defect_one", "l(x*y) - l(x) - l(y)", wt_length(res.product) - wt_length(x) - wt_length(y))

    for name in GOLDEN["figure"]:
        text = name[3:-1]
        check("figure", name, _set(lp_set(parse_element(text)).elements))

    if strict and not report.ok:
        raise GoldenMismatch(report.mismatches())
    return report
