import pytest

from sieve_mk.certify import certify_mk


@pytest.fixture(scope="session")
def cert105():
    return certify_mk(105, 11, 4)


@pytest.fixture(scope="session")
def cert5():
    return certify_mk(5, 3, 2)


@pytest.fixture
def cache(tmp_path, monkeypatch):
    monkeypatch.setenv("SIEVE_MK_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
