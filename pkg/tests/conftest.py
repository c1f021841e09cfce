from __future__ import annotations

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

FIVE_QUBIT = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]

# two symmetric seed vectors for the [[17, 1]] family, with a_0 = 0 prepended
K1_VECTORS = ["0" + "0110100110010110", "0" + "0100011111100010"]


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False, help="run multi-minute searches")


def pytest_configure(config):
    config.addinivalue_line("markers", "long: long-running search, enabled with --long")
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def five_qubit():
    from stabcodes import CheckMatrix, stabilizer_code

    return stabilizer_code(CheckMatrix.from_paulis(FIVE_QUBIT), construction_tag="five-qubit")


_CRITERIA: dict[int, list[tuple[str, str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        if report.passed:
            status = "PASS"
        else:
            status = "SKIP" if report.skipped else "FAIL"
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        if status == "FAIL" and not detail:
            detail = getattr(getattr(report.longrepr, "reprcrash", None), "message", "error")
        if status == "SKIP":
            detail = f"{item.name} skipped"
        _CRITERIA.setdefault(marker.args[0], []).append((status, detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        parts = _CRITERIA[number]
        statuses = {status for status, _ in parts}
        # a criterion split over several tests fails if any part fails; optional long parts may skip
        overall = "FAIL" if "FAIL" in statuses else "PASS" if "PASS" in statuses else "SKIP"
        detail = "; ".join(d for _, d in parts if d)
        terminalreporter.write_line(f"criterion {number:>2}: {overall}  {detail}")
