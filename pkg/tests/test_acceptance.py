"""The fourteen acceptance criteria, one test each.

Each test prints its ``[PASS]``/``[FAIL]`` line, and the lines are repeated
in a summary section at the end of the run.  Run this file directly for the
lines alone: ``python tests/test_acceptance.py``.
"""
import pytest

from kirbycalc.acceptance import CRITERIA, run_check

# The lantern claim fails in the shadow model: an exhaustive scan of small
# lambda finds links admissible on the K' side only.  See the decisions ledger.
KNOWN_FAILURES = {13: "reverse lantern implication has counterexamples (lambda box scan)"}


def _params():
    for number, title, _, _ in CRITERIA:
        marks = [pytest.mark.xfail(reason=KNOWN_FAILURES[number], strict=True)] \
            if number in KNOWN_FAILURES else []
        if number == 6:
            marks.append(pytest.mark.slow)
        yield pytest.param(number, id=f"{number:02d}-{title.lower().replace(' ', '-')}", marks=marks)


@pytest.mark.parametrize("number", list(_params()))
def test_criterion(number, record_acceptance):
    result = run_check(number)
    record_acceptance(result)
    print(result.line())
    assert result.passed, result.detail


if __name__ == "__main__":
    import sys
    results = [run_check(c[0]) for c in CRITERIA]
    for r in results:
        print(r.line(), flush=True)
    sys.exit(0 if all(r.passed for r in results) else 1)
