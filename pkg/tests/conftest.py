import pytest

_CRITERIA: dict[str, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion.

    Usage: ``criterion("1", "description")`` inside the test; the outcome is
    taken from the test's own result.
    """
    names = []

    def register(key, text):
        names.append((key, text))

    yield register
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    for key, text in names:
        prev = _CRITERIA.get(key)
        status = "FAIL" if failed or (prev and prev[0] == "FAIL") else "PASS"
        _CRITERIA[key] = (status, text)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=lambda k: (len(k), k)):
        status, text = _CRITERIA[key]
        terminalreporter.write_line(f"[{status}] criterion {key}: {text}")
