import pytest

_acceptance = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    passed = call.excinfo is None
    _acceptance.append((number, title, passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_acceptance):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}")


@pytest.fixture
def rng():
    import random

    return random.Random(0x5EED)
