"""The twelve acceptance criteria, each checked with exact arithmetic.

Every criterion prints one PASS/FAIL line followed by one line per
sub-claim.  The lines are also collected and shown in the pytest terminal
summary, so they appear even when output is captured.  Run this file
directly to print them without pytest.

Sub-claims tagged [info] document a corrected variant and do not affect
the verdict.
"""

import pytest

from qhomology.acceptance import CRITERIA, run_criterion

REPORT = []


@pytest.mark.parametrize("number", [k for k, _, _ in CRITERIA],
                         ids=["criterion_%02d" % k for k, _, _ in CRITERIA])
def test_criterion(number):
    res = run_criterion(number)
    lines = res.lines()
    REPORT.extend(lines)
    print("\n".join(lines))
    failing = [s.label for s in res.subs if not s.informational and not s.passed]
    assert res.passed, "failing sub-claims: %s" % "; ".join(failing)


if __name__ == "__main__":
    for k, _, _ in CRITERIA:
        print("\n".join(run_criterion(k).lines()), flush=True)
