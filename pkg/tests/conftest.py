from __future__ import annotations

from hypothesis import strategies as st

from dademazure.roots import AffineRoot, Coweight
from dademazure.titscone import WTElement
from dademazure.weyl import WeylElt

weyl_elts = st.builds(WeylElt, st.sampled_from([1, -1]), st.integers(-6, 6))
roots = st.builds(AffineRoot, st.sampled_from([1, -1]), st.integers(-8, 8))
coweights = st.builds(Coweight, st.integers(-8, 8), st.integers(-8, 8), st.integers(-4, 4))


@st.composite
def tits_coweights(draw, min_level: int = 0, max_level: int = 5) -> Coweight:
    l = draw(st.integers(min_level, max_level))
    k = draw(st.integers(-6, 6)) if l else 0
    return Coweight(k, draw(st.integers(-6, 6)), l)


@st.composite
def elements(draw, min_level: int = 0, max_level: int = 5) -> WTElement:
    w = WeylElt(draw(st.sampled_from([1, -1])), draw(st.integers(-3, 3)))
    return WTElement(w, draw(tits_coweights(min_level, max_level)))


def pytest_terminal_summary(terminalreporter):
    lines = [
        value
        for reports in terminalreporter.stats.values()
        for rep in reports
        if getattr(rep, "when", None) == "call"
        for key, value in getattr(rep, "user_properties", ())
        if key == "acceptance"
    ]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
