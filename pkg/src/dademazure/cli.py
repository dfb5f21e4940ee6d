"""
Command-line front end.

Exit codes: 0 on success, 1 when a check or property fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .demazure import dem_product, min_pairs
from .examples import run_examples
from .lp import lp_set
from .qbg import distance, shortest_paths, weight
from .titscone import ParseError, parse_element, wt_length, wt_mul
from .verify import SUITES, Bounds, run_verify
from .weyl import parse_word

SCHEMA = 1


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))
    else:
        print(text)


def _cmd_lp(args) -> int:
    x = parse_element(args.element)
    lp = lp_set(x)
    _emit(args, {"element": str(x), "lp": lp.to_json()}, str(lp))
    return 0


def _cmd_len(args) -> int:
    x = parse_element(args.element)
    _emit(args, x.to_json(), str(wt_length(x)))
    return 0


def _cmd_mul(args) -> int:
    x, y = parse_element(args.x), parse_element(args.y)
    xy = wt_mul(x, y)
    _emit(args, {"product": str(xy), "length": wt_length(xy)}, str(xy))
    return 0


def _cmd_dem(args) -> int:
    x, y = parse_element(args.x), parse_element(args.y)
    res = dem_product(x, y)
    ok = wt_length(res.product) == wt_length(x) + wt_length(y) - res.defect
    pairs = ", ".join(f"({u}, {v})" for u, v in res.pairs.pairs)
    text = (
        f"product    {res.product}\n"
        f"pairs      {pairs}\n"
        f"dist       {res.defect}\n"
        f"uv_inverse {res.uv_inverse}\n"
        f"v_weight   {res.v_weight}\n"
        f"length     {wt_length(res.product)} = {wt_length(x)} + {wt_length(y)} - {res.defect}: {ok}"
    )
    _emit(args, {**res.to_json(), "length_check": ok}, text)
    return 0 if ok else 1


def _cmd_minpairs(args) -> int:
    x, y = parse_element(args.x), parse_element(args.y)
    mp = min_pairs(x, y)
    text = f"dist {mp.dist}\n" + "\n".join(f"{u}  |  {v}" for u, v in mp.pairs)
    _emit(args, mp.to_json(), text)
    return 0


def _cmd_qbg_dist(args) -> int:
    u, v = parse_word(args.u), parse_word(args.v)
    d = distance(u, v)
    _emit(args, {"u": str(u), "v": str(v), "distance": d}, str(d))
    return 0


def _cmd_qbg_wt(args) -> int:
    u, v = parse_word(args.u), parse_word(args.v)
    wt = weight(u, v)
    _emit(args, {"u": str(u), "v": str(v), "weight": wt.as_list()}, str(wt))
    return 0


def _cmd_qbg_paths(args) -> int:
    u, v = parse_word(args.u), parse_word(args.v)
    paths = shortest_paths(u, v)
    lines = [
        " -> ".join([str(p.edges[0].src)] + [f"[{e.kind.value[0]}] {e.dst}" for e in p.edges])
        if p.edges else str(u)
        for p in paths
    ]
    payload = {"u": str(u), "v": str(v), "paths": [[e.to_json() for e in p.edges] for p in paths]}
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_examples(args) -> int:
    report = run_examples()
    text = "\n".join(
        f"{'PASS' if c.ok else 'FAIL'}  {c.example}: {c.field} = {c.actual}"
        + ("" if c.ok else f" (expected {c.expected})")
        for c in report.checks
    )
    _emit(args, report.to_json(), text)
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    bounds = Bounds(args.max_k, args.max_m, args.max_l)
    report = run_verify(args.suite, args.seed, args.count, bounds)
    lines = []
    for r in report.results.values():
        status = "PASS" if r.failed == 0 else ("FAIL" if r.asserted else "NOTE")
        line = f"{status}  {r.name}: {r.passed} passed, {r.failed} failed"
        if r.counterexample:
            line += f"; first counterexample: {r.counterexample}"
        lines.append(line)
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dademazure",
        description="Demazure products on the double affine Weyl semigroup of affine SL2.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def element_cmd(name, func, help_text, *names):
        p = sub.add_parser(name, help=help_text)
        for n in names:
            p.add_argument(n, help="element such as 's0 s1 e[-1a+0d+1L]'")
        p.set_defaults(func=func)

    def word_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("u", help="Weyl group word such as 's0 s1'")
        p.add_argument("v")
        p.set_defaults(func=func)

    element_cmd("lp", _cmd_lp, "length-positive set", "element")
    element_cmd("len", _cmd_len, "length", "element")
    element_cmd("mul", _cmd_mul, "semigroup product", "x", "y")
    element_cmd("dem", _cmd_dem, "Demazure product", "x", "y")
    element_cmd("minpairs", _cmd_minpairs, "distance-minimising pairs", "x", "y")
    word_cmd("qbg-dist", _cmd_qbg_dist, "quantum Bruhat graph distance")
    word_cmd("qbg-wt", _cmd_qbg_wt, "weight of shortest paths")
    word_cmd("qbg-paths", _cmd_qbg_paths, "all shortest paths")

    p = sub.add_parser("examples", help="recompute the worked examples against stored values")
    p.set_defaults(func=_cmd_examples)

    p = sub.add_parser("verify", help="randomised property suites")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-k", type=int, default=6)
    p.add_argument("--max-m", type=int, default=6)
    p.add_argument("--max-l", type=int, default=5)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
