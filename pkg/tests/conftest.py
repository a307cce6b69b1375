import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: list[tuple[str, bool, str]] = []


class _Recorder:
    def __call__(self, criterion: str, passed: bool, detail: str = "") -> bool:
        _ACCEPTANCE.append((criterion, bool(passed), detail))
        print(f"[acceptance] {criterion}: {'PASS' if passed else 'FAIL'}  {detail}")
        return passed


@pytest.fixture
def acceptance():
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"{criterion:<4} {'PASS' if passed else 'FAIL'}  {detail}")
    failed = sum(1 for _, ok, _ in _ACCEPTANCE if not ok)
    terminalreporter.write_line(f"{len(_ACCEPTANCE) - failed}/{len(_ACCEPTANCE)} criteria passed")
