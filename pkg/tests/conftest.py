"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from hessgkm.combinatorics import HessenbergFunction, Permutation
from hessgkm.symbolic import Polynomial


@st.composite
def permutations_of(draw, n):
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def hessenberg_of(draw, n):
    values, prev = [], 1
    for j in range(1, n + 1):
        v = draw(st.integers(min_value=max(prev, j), max_value=n))
        values.append(v)
        prev = v
    return HessenbergFunction(tuple(values))


@st.composite
def polynomials(draw, n=3, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.lists(st.integers(0, max_degree), min_size=n, max_size=n)))
        terms[exps] = draw(st.integers(-5, 5))
    return Polynomial(n, terms)


# criterion number -> (title, passed, seconds, limit); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool, float, float]] = {}


def acceptance_lines() -> list[str]:
    lines = []
    for k in sorted(ACCEPTANCE):
        title, ok, secs, limit = ACCEPTANCE[k]
        lines.append(f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {secs:7.2f}s / {limit:g}s  {title}")
    return lines


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines():
            terminalreporter.write_line(line)
