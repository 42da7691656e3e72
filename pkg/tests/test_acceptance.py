"""Acceptance gate: one test per criterion, each printing its PASS/FAIL
line (run pytest with -s to see them inline; the CLI equivalent is
``knotcert selftest``).  Every tolerance is exact equality.
"""

import pytest

from knotcert.acceptance import ALL_CHECKS


@pytest.mark.parametrize("check", ALL_CHECKS, ids=lambda c: c.__name__)
def test_criterion(check):
    result = check()
    print(("PASS" if result.passed else "FAIL") + f" {result.name}: {result.detail}")
    assert result.passed, f"{result.name}: {result.detail}"
