import pytest

from artifact.suites import SUITES, run_suites


@pytest.mark.parametrize("name", SUITES)
def test_suite_passes(name):
    checks = run_suites([name])
    assert checks and [c.name for c in checks if not c.ok] == []
