"""
Acceptance gate. Each criterion records a PASS/FAIL line that the terminal
summary prints; running this file directly prints the same lines.
"""

from __future__ import annotations

import sys
import time

import pytest

from dademazure.demazure import dem_product, is_length_additive, min_pairs
from dademazure.examples import left_form
from dademazure.lp import lp_set
from dademazure.qbg import bfs_distances, distance, shortest_paths, weight
from dademazure.roots import Coweight
from dademazure.titscone import parse_element, wt_length, wt_mul
from dademazure.verify import run_verify
from dademazure.weyl import elements_up_to, length, mul, parse_word


def words(*texts: str) -> set:
    return {parse_word(t) for t in texts}


def criterion_1() -> tuple[bool, str]:
    x = left_form(Coweight(0, 1, 1), "s0 s1")
    y = left_form(Coweight(0, 4, 1), "e")
    res = dem_product(x, y)
    checks = {
        "LP(x)": set(lp_set(x).elements) == words("s1 s0", "s1 s0 s1", "s1"),
        "LP(y)": set(lp_set(y).elements) == words("e", "s1"),
        "M": res.pairs.pairs == ((parse_word("s1"), parse_word("s1")),),
        "x*y": res.product == parse_element("s0 s1 e[-1a+4d+2L]"),
        "xy": wt_mul(x, y) == res.product,
    }
    return all(checks.values()), ", ".join(k for k, ok in checks.items() if not ok)


def criterion_2() -> tuple[bool, str]:
    x = left_form(Coweight(0, 0, 1), "s0 s1 s0")
    y = left_form(Coweight(0, 0, 1), "s0")
    res = dem_product(x, y)
    lx, ly = lp_set(x), lp_set(y)
    checks = {
        "LP(x)": set(lx.elements) == words("s0 s1 s0 s1", "s0 s1 s0", "s0 s1"),
        "LP(y)": set(ly.elements) == words("s0 s1", "s0", "e"),
        "empty intersection": not set(lx.elements) & {mul(y.w, v) for v in ly.elements},
        "not additive": not is_length_additive(x, y),
        "(s0 s1, e) in M": (parse_word("s0 s1"), parse_word("e")) in min_pairs(x, y).pairs,
        "wt": weight(parse_word("s0 s1"), parse_word("s0")) == Coweight(1, 0, 0),
        "x*y": res.product == parse_element("s1 t[-1] e[1a-2d+2L]"),
        "length": wt_length(res.product) == wt_length(x) + wt_length(y) - 1,
    }
    return all(checks.values()), ", ".join(k for k, ok in checks.items() if not ok)


def criterion_3() -> tuple[bool, str]:
    a = lp_set(parse_element("t[-1] e[-2a+1d+4L]"))
    b = lp_set(parse_element("s1 t[-1] e[1a-1d+1L]"))
    checks = {
        "first": set(a.elements) == words("s1", "s1 s0"),
        "second": set(b.elements) == words("e", "s0", "s0 s1"),
    }
    return all(checks.values()), ", ".join(k for k, ok in checks.items() if not ok)


def criterion_4() -> tuple[bool, str]:
    window = list(elements_up_to(8))
    bad = []
    pairs = 0
    for u in window:
        for v in window:
            pairs += 1
            d = bfs_distances(u, length(u) + length(v) + 4)[v]
            paths = shortest_paths(u, v)
            if d != distance(u, v) or not paths:
                bad.append(f"distance {u} => {v}")
            elif {p.wt for p in paths} != {weight(u, v)} or any(p.len != d for p in paths):
                bad.append(f"weight {u} => {v}")
    return not bad and pairs == 289, f"{pairs} pairs" + (f"; {bad[:3]}" if bad else "")


def _suite(suite: str, count: int, key: str, minimum: int) -> tuple[bool, str]:
    report = run_verify(suite, seed=20261018, count=count)
    failing = [r.name for r in report.results.values() if r.asserted and r.failed]
    enough = report.results[key].passed >= minimum
    notes = [
        f"{r.name}: {r.passed}/{r.passed + r.failed}"
        for r in report.results.values() if not r.asserted
    ]
    return report.ok and enough and not failing, "; ".join(failing + notes)


def criterion_5() -> tuple[bool, str]:
    return _suite("lp", 1000, "lp: algorithm = brute-force oracle", 1000)


def criterion_6() -> tuple[bool, str]:
    return _suite("demazure", 500, "demazure: independent of pair and path", 500)


def criterion_7() -> tuple[bool, str]:
    return _suite("assoc", 200, "assoc: levels >= 2", 200)


CRITERIA = {
    1: ("worked additive example", criterion_1, 1.0),
    2: ("worked defect-one example", criterion_2, 1.0),
    3: ("pictured length-positive sets", criterion_3, None),
    4: ("QBG closed forms = BFS oracle", criterion_4, 10.0),
    5: ("LP algorithm = oracle, size/connectivity/shape", criterion_5, 30.0),
    6: ("Demazure product properties", criterion_6, 60.0),
    7: ("associativity at levels >= 2", criterion_7, 60.0),
}


def evaluate(number: int) -> tuple[bool, str]:
    name, func, limit = CRITERIA[number]
    start = time.perf_counter()
    ok, detail = func()
    elapsed = time.perf_counter() - start
    within = limit is None or elapsed < limit
    budget = f" (limit {limit:.0f}s)" if limit else ""
    status = "PASS" if ok and within else "FAIL"
    line = f"{status} criterion {number}: {name} [{elapsed:.2f}s{budget}]"
    if detail:
        line += f" {detail}"
    return ok and within, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, record_property):
    ok, line = evaluate(number)
    record_property("acceptance", line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
