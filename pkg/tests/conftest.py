import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import newton_corpus  # noqa: E402
from tropical_nearby.hodge import NewtonData, full_report  # noqa: E402

_REPORTS = {}


def report_for(name, points, lifts):
    if name not in _REPORTS:
        _REPORTS[name] = full_report(NewtonData(points, lifts))
    return _REPORTS[name]


@pytest.fixture(scope="session")
def corpus_reports():
    return [(name, NewtonData(p, l), report_for(name, p, l)) for name, p, l in newton_corpus()]


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
