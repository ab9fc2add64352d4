"""The eleven acceptance criteria, one PASS/FAIL line each."""

import pytest

from og4kit.acceptance import SUITES, run_suite


@pytest.mark.parametrize("name", list(SUITES))
def test_criterion(name, capsys):
    claims = run_suite(name)
    ok = bool(claims) and all(c.passed for c in claims)
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {name}: {sum(c.passed for c in claims)}/{len(claims)} claims")
        for c in claims:
            if not c.passed:
                print(f"    failed: {c.name} [{c.detail}]")
    assert ok, [c for c in claims if not c.passed]
