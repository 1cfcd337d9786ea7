"""Acceptance gate: every criterion of the desk suite, one line each.

Each criterion is a self-contained check over its stated parameter grid.
The implementations live next to the fixtures subcommand so the command
line and this gate run exactly the same code.
"""

import time

import pytest

from cyclohecke.cli import desk_criteria

CRITERIA = desk_criteria()


@pytest.mark.parametrize(
    "name,check,budget",
    CRITERIA,
    ids=[name.replace(" ", "-") for name, _, _ in CRITERIA],
)
def test_criterion(name, check, budget):
    start = time.perf_counter()
    try:
        detail = check()
    except AssertionError as exc:
        elapsed = time.perf_counter() - start
        print(f"criterion {name}: FAIL ({elapsed:.1f}s) {exc}")
        raise
    elapsed = time.perf_counter() - start
    print(f"criterion {name}: PASS ({elapsed:.1f}s) {detail}")
    if budget is not None:
        assert elapsed < budget, (
            f"criterion {name} took {elapsed:.1f}s, budget {budget}s"
        )
