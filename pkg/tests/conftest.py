import pytest

from compdna.core import StrandMatrix

EXAMPLE_X = StrandMatrix((
    (0, 1, 1, 0),
    (1, 1, 0, 0),
    (0, 1, 1, 0),
    (1, 1, 1, 1),
    (1, 1, 0, 1),
))


@pytest.fixture
def example_x():
    return EXAMPLE_X


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
