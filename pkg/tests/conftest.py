import pytest

_RESULTS = {}


class CriterionReport:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.details = []

    def note(self, text: str) -> None:
        self.details.append(text)


@pytest.fixture
def criterion(request):
    """Yields a reporter; the outcome line is printed in the terminal summary."""
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    rep = CriterionReport(number, title)
    _RESULTS[number] = (rep, None)
    yield rep


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number = marker.args[0]
    rep = _RESULTS.get(number, (None, None))[0]
    _RESULTS[number] = (rep, report.passed)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        rep, passed = _RESULTS[number]
        status = "PASS" if passed else "FAIL"
        detail = "; ".join(rep.details) if rep else ""
        title = rep.title if rep else ""
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
