import time
from contextlib import contextmanager

import pytest

_RESULTS = []


class Criterion:
    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.notes = []

    def note(self, text):
        self.notes.append(text)


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion."""

    @contextmanager
    def _run(number, title, budget_s):
        c = Criterion(number, title)
        start = time.perf_counter()
        ok = False
        try:
            yield c
            elapsed = time.perf_counter() - start
            c.note(f"{elapsed:.3f}s of {budget_s:g}s")
            assert elapsed < budget_s, f"criterion {number} took {elapsed:.3f}s, budget {budget_s}s"
            ok = True
        finally:
            _RESULTS.append((number, title, ok, "; ".join(c.notes)))

    return _run


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, notes in sorted(_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}  ({notes})")
