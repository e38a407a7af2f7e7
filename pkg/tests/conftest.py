import random

import pytest

from kashaev.catalog import load_catalog
from kashaev.diagram import parse_pd, random_mutation

TREFOIL = "X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)"  # right-handed, all crossings positive
TREFOIL_LEFT = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"
FIGURE_EIGHT = "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)"
HOPF_NEG = "X(4,1,3,2),X(2,3,1,4)"


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture(scope="session")
def figure_eight():
    return parse_pd(FIGURE_EIGHT)


def mutate(d, steps, seed):
    rng = random.Random(seed)
    for _ in range(steps):
        d, _ = random_mutation(d, rng)
    return d


# one line per acceptance criterion, shown in the terminal summary
ACCEPTANCE: list[str] = []


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
