import pytest

# criterion number -> (label, passed)
_results: dict[int, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    marker = props.get("criterion")
    if marker is None:
        return
    label = props["label"]
    ok = _results.get(marker, (label, True))[1] and report.passed
    _results[marker] = (label, ok)


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    m = item.get_closest_marker("acceptance")
    if m is not None:
        item.user_properties.append(("criterion", m.args[0]))
        item.user_properties.append(("label", m.args[1]))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        label, ok = _results[k]
        terminalreporter.write_line(f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {label}")
