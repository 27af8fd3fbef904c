import pytest

_RESULTS: dict = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance check under a criterion label."""
    labels = []

    def register(label, description):
        labels.append((label, description))

    yield register
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    for label, description in labels:
        ok, descs = _RESULTS.get(label, (True, []))
        _RESULTS[label] = (ok and passed, descs + [description])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_RESULTS, key=lambda s: int(s)):
        ok, descs = _RESULTS[label]
        terminalreporter.write_line(f"criterion {label:>2}: {'PASS' if ok else 'FAIL'}  {'; '.join(descs)}")
