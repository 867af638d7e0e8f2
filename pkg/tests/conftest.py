from __future__ import annotations

import pytest

from towercoh.weights import LIMITS, set_multiset_cap

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def restore_limits():
    cap = LIMITS.multiset_cap
    yield LIMITS
    set_multiset_cap(cap)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        verdict, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {verdict}  {title}")
