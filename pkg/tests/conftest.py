import random

import pytest

_criteria: dict[int, dict] = {}


def _entry(number, title):
    return _criteria.setdefault(number, {"title": title, "failed": False, "ran": False, "notes": []})


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when not in ("setup", "call"):
        return
    number, title = marker.args
    entry = _entry(number, title)
    if call.when == "call":
        entry["ran"] = True
    if call.excinfo is not None:
        entry["failed"] = True


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "FAIL" if e["failed"] else ("PASS" if e["ran"] else "NOT RUN")
        terminalreporter.write_line(f"criterion {number}: {status}  {e['title']}")
        for note in e["notes"]:
            terminalreporter.write_line(f"    {note}")


@pytest.fixture
def criterion_note(request):
    """Attach a finding to the summary line of the test's criterion."""
    marker = request.node.get_closest_marker("criterion")
    entry = _entry(*marker.args)
    return entry["notes"].append


@pytest.fixture
def rng():
    return random.Random(20261018)
