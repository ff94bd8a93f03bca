import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion's outcome; call with (label, passed, detail)."""

    def record(label, passed, detail):
        _CRITERIA[label] = (bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=_natural_key):
        passed, detail = _CRITERIA[label]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label:<4} {detail}")


def _natural_key(label):
    digits = "".join(ch for ch in label if ch.isdigit())
    return (int(digits or 0), label)
