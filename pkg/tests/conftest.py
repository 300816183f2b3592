import json
from pathlib import Path

import pytest

_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def published_tables():
    return json.loads((Path(__file__).parent / "data" / "published_tables.json").read_text())["families"]


@pytest.fixture
def criterion(request):
    """Record one acceptance line, print it, and fail the test if the check failed."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title}"
        if detail and not ok:
            line += f"  [{detail}]"
        lines.append((number, line))
        print(line)
        assert ok, detail or title

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
