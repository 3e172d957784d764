from __future__ import annotations

import pytest

# Filled by tests/test_acceptance.py; echoed after the run so the
# per-criterion pass/fail lines are visible in plain `pytest -v` output.
ACCEPTANCE_LOG: list[tuple[int, str, bool]] = []


@pytest.fixture
def acceptance():
    def record(num: int, desc: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LOG.append((num, desc, bool(ok)))
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {desc}"
        print(line)
        assert ok, line + (f" ({detail})" if detail else "")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok in sorted(ACCEPTANCE_LOG):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {desc}")
