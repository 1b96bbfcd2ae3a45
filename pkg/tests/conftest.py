from __future__ import annotations

import pytest

from stacktree.metrics import MetricsConfig, MetricsMode

# Width-table metrics that force exact label widths at font size 10:
# each character is factor * 10 pt wide.
GOLDEN_WIDTHS = {
    "L": 2.0,  # 20 pt
    "R": 1.0,  # 10 pt
    "P": 0.8,  # 8 pt
    "W": 6.0,  # 60 pt
    "F": 0.6,  # 6 pt
}


@pytest.fixture
def golden_metrics() -> MetricsConfig:
    return MetricsConfig(mode=MetricsMode.WIDTH_TABLE, width_table=GOLDEN_WIDTHS)


_CRITERIA: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report: pytest.TestReport) -> None:
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        outcome = "PASS" if report.outcome == "passed" else "FAIL"
        if _CRITERIA.get(name, ("PASS",))[0] != "FAIL":
            _CRITERIA[name] = (outcome, name)


def pytest_terminal_summary(terminalreporter) -> None:
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda n: int(n.split("_")[2])):
        outcome, _ = _CRITERIA[name]
        terminalreporter.write_line(f"{outcome}  {name}")
