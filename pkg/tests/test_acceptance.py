"""Acceptance criteria, one test each; the verdict line is printed uncaptured."""

import pytest

from nearfrob.checks import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA],
                         ids=[name.replace(" ", "_") for _, name, _ in CRITERIA])
def test_criterion(number, fx, capsys):
    res = run_criterion(number, fx)
    with capsys.disabled():
        print(f"\n{'PASS' if res.passed else 'FAIL'} {res.number} {res.name}")
    assert res.passed, "\n".join(res.lines)
