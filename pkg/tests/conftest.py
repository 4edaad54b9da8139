from __future__ import annotations

# criterion id -> (status, title); a failure in any phase sticks
_OUTCOMES: dict[str, tuple[str, str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            item.user_properties.append(("acceptance", mark.args))


def pytest_runtest_logreport(report):
    for name, (cid, title) in report.user_properties:
        if name != "acceptance":
            continue
        if report.when == "call" or report.failed:
            if _OUTCOMES.get(cid, ("PASS",))[0] == "PASS":
                _OUTCOMES[cid] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_OUTCOMES, key=lambda c: int(c[2:])):
        status, title = _OUTCOMES[cid]
        terminalreporter.write_line(f"{status} {cid} {title}")
