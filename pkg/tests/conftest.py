"""Shared pytest hooks: replay acceptance verdict lines after the run."""

from __future__ import annotations

import pytest


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    """Print the acceptance verdict table collected during the run."""
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if not VERDICTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in VERDICTS:
        terminalreporter.write_line(line)
