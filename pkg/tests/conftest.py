"""Shared corpora and the acceptance summary hook."""

from __future__ import annotations

import pytest

from csdlab.expr import evaluate, parse

# Diverse non-trivial groups whose full subgroup lattice is cheap.
CORPUS_EXPRS = (
    "Z(1)",
    "Z(2)",
    "Z(6)",
    "Z(12)",
    "Z(24)",
    "Ea(2,2)",
    "Ea(2,3)",
    "Ea(3,2)",
    "D(6)",
    "D(8)",
    "D(12)",
    "D(16)",
    "D(20)",
    "D(24)",
    "Q(8)",
    "Q(16)",
    "Q(32)",
    "SD(16)",
    "SD(32)",
    "M(16)",
    "M(27)",
    "M(32)",
    "P(2,3,2)",
    "P(2,5,2)",
    "P(3,3,2)",
    "ZM(3,4,2)",
    "ZM(5,4,2)",
    "ZM(7,3,2)",
    "E(27)",
    "A(4)",
    "S(3)",
    "S(4)",
    "Z(2)xD(8)",
    "Z(3)xS(3)",
    "Z(2)xQ(8)",
    "Z(4)xQ(8)",
)

# The subset used against the exhaustive subset-enumeration oracle.
SMALL_EXPRS = tuple(
    text
    for text in CORPUS_EXPRS
    if evaluate(parse(text)).order <= 24
)


@pytest.fixture(scope="session")
def corpus():
    return [(text, evaluate(parse(text))) for text in CORPUS_EXPRS]


@pytest.fixture(scope="session")
def small_corpus():
    return [(text, evaluate(parse(text))) for text in SMALL_EXPRS]


# ---------------------------------------------------------------------------
# Acceptance summary: test_acceptance.py records one line per criterion and
# the terminal summary repeats them all, pass or fail, at the end of the run.

ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> str:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
