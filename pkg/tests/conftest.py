import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


class _Recorder:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title

    def __call__(self, ok: bool, detail: str = ""):
        line = f"{self.title}" + (f" ({detail})" if detail else "")
        _ACCEPTANCE[self.number] = (bool(ok), line)
        assert ok, line


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    _ACCEPTANCE[number] = (False, f"{title} (did not complete)")
    return _Recorder(number, title)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, line = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {line}")
