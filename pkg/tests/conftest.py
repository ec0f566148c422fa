import math

import pytest

from geoprob.rng import RngStream


def se(p: float, n: int) -> float:
    return math.sqrt(p * (1.0 - p) / n)


@pytest.fixture
def rng():
    return RngStream(20241226)


CRITERIA: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        CRITERIA.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
