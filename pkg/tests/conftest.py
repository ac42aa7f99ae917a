import os
import sys

import mpmath
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from mahlerlog.mpcore import make_context  # noqa: E402


@pytest.fixture(scope="session")
def ctx():
    return make_context(50)


@pytest.fixture(scope="session")
def ctx40():
    return make_context(40)


def digits(a, b):
    """Matching digits relative to max(1, |a|), computed at high precision."""
    with mpmath.workdps(120):
        a, b = mpmath.mpmathify(a), mpmath.mpmathify(b)
        d = abs(a - b)
        if d == 0:
            return 10 ** 6
        return int(mpmath.floor(-mpmath.log10(d / max(abs(a), 1))))


def assert_digits(a, b, n):
    got = digits(a, b)
    assert got >= n, f"only {got} digits agree (need {n}): {mpmath.nstr(a, 30)} vs {mpmath.nstr(b, 30)}"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
