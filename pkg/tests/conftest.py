import pytest

# criterion number -> (title, [(test name, outcome, note)])
_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if hasattr(rep, "wasxfail"):
            status, note = "FAIL", f"known: {rep.wasxfail}"
        else:
            status, note = ("PASS" if rep.passed else "FAIL"), ""
        _results.setdefault(num, (title, []))[1].append((item.name, status, note))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_results):
        title, parts = _results[num]
        failed = [p for p in parts if p[1] != "PASS"]
        tr.write_line(f"{'FAIL' if failed else 'PASS'} criterion {num:2d}: {title}")
        for name, _, note in failed:
            tr.write_line(f"     {name}: {note or 'assertion failed'}")
