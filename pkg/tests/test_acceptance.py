"""Acceptance gate: every verification criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the one-line
PASS/FAIL report per criterion (the same lines the ``verify`` CLI
subcommand prints).
"""

import pytest

from cyclecollide.verify import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.name)
def test_criterion(criterion):
    result = criterion.run()
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} {criterion.name}: {result.detail} ({result.elapsed:.2f}s)")
    assert result.passed, f"{criterion.name}: {result.detail}"
    assert result.elapsed < criterion.time_limit, (
        f"{criterion.name} took {result.elapsed:.1f}s, "
        f"budget {criterion.time_limit:.0f}s"
    )
