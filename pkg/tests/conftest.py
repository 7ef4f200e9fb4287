import time

import numpy as np
import pytest

from starlike_area import _backend

ACCEPTANCE = []
SUITE_BUDGET_S = 180.0
_START = time.perf_counter()


@pytest.fixture
def record_criterion():
    """Log a criterion verdict for the end-of-run summary, then assert it."""
    def _record(number, name, ok, detail=""):
        ACCEPTANCE.append((number, name, bool(ok), detail))
        assert ok, f"criterion {number} ({name}) failed: {detail}"
    return _record


@pytest.fixture(params=_backend.available())
def backend(request):
    previous = _backend.name
    _backend.use(request.param)
    yield request.param
    _backend.use(previous)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _START
    session.config._suite_elapsed = elapsed
    if elapsed > SUITE_BUDGET_S and exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {name}  {detail}")
    elapsed = getattr(config, "_suite_elapsed", time.perf_counter() - _START)
    ok = elapsed <= SUITE_BUDGET_S
    terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] 11b. suite runtime {elapsed:.1f}s (budget {SUITE_BUDGET_S:.0f}s)")
