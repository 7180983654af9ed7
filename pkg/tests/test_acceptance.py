"""The six acceptance criteria.  Each prints one PASS/FAIL line, repeated
in the terminal summary so it shows without ``-s``."""
import pytest

from stokesgraph.verify import SUITES, run

LINES: list[str] = []


@pytest.mark.parametrize("name", list(SUITES))
def test_acceptance(name):
    (result,) = run(name)
    print(result.line())
    LINES.append(result.line())
    assert result.ok, result.detail
