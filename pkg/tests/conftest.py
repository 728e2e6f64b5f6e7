import sys

import pytest

from etastar.corpus import builtin, builtin_entries, enumerated_entries


@pytest.fixture(scope="session")
def builtins():
    return {e.name: e.semigroup for e in builtin_entries()}


@pytest.fixture(scope="session")
def enumerated():
    return [e.semigroup for e in enumerated_entries(4)]


@pytest.fixture(scope="session")
def corpus(builtins, enumerated):
    """(name, semigroup) for every builtin and every enumerated semigroup of order <= 4."""
    return list(builtins.items()) + [(S.name, S) for S in enumerated]


@pytest.fixture(scope="session")
def paper23():
    return builtin("paper23")


@pytest.fixture(scope="session")
def f7():
    return builtin("f7")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
