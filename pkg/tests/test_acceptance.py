"""Acceptance criteria, one test per criterion.

Each test runs the registered checks for its criterion, prints a single
PASS/FAIL line and asserts both correctness and the time bound.
Run directly (python tests/test_acceptance.py) for the summary alone.
"""

import pytest

from satcr.checks import CRITERIA, run_criterion


def _line(n, ok, elapsed, bound, reports):
    status = "PASS" if ok and elapsed < bound else "FAIL"
    failed = [r.id for r in reports if r.status != "pass"]
    extra = f"  failing: {', '.join(failed)}" if failed else ""
    return (f"criterion {n:2d} {status}  {CRITERIA[n][0]}  "
            f"({elapsed:.2f}s, bound {bound:g}s, {len(reports)} checks){extra}")


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    name, bound = CRITERIA[n]
    ok, elapsed, reports = run_criterion(n)
    with capsys.disabled():
        print("\n" + _line(n, ok, elapsed, bound, reports))
    assert reports, f"criterion {n} has no checks"
    assert ok, [r.as_dict() for r in reports if r.status != "pass"]
    assert elapsed < bound, f"{elapsed:.2f}s exceeds {bound}s"


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        ok, elapsed, reports = run_criterion(n)
        print(_line(n, ok, elapsed, CRITERIA[n][1], reports))
