import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from enumerators import complexes_on, semigroup_tree  # noqa: E402

from agr_lab.complexes import complex_from_facets  # noqa: E402

ACCEPTANCE_LINES = []


def record_criterion(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


@pytest.fixture(scope="session")
def semigroups_f15():
    return semigroup_tree(15)


@pytest.fixture(scope="session")
def complexes_upto5():
    return [complex_from_facets(n, f) for n in range(1, 6) for f in complexes_on(n)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
