"""Shared fixtures and the acceptance-criteria summary hook."""

from __future__ import annotations

import pytest

from sectormap.geometry import DEFAULT_SPEC, PartitionSpec, Point
from sectormap.raster import build_library

# (label, outcome) pairs collected from tests/test_acceptance.py
_acceptance_results: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def default_spec() -> PartitionSpec:
    return DEFAULT_SPEC


@pytest.fixture(scope="session")
def default_library():
    return build_library(DEFAULT_SPEC)


@pytest.fixture(scope="session")
def default_lib_dir(tmp_path_factory, default_library):
    """The default library saved to disk once for CLI and service tests."""
    from sectormap.raster import save_library

    directory = tmp_path_factory.mktemp("default_library") / "lib"
    save_library(default_library, directory)
    return directory


@pytest.fixture(scope="session")
def small_spec() -> PartitionSpec:
    """A 64x48 canvas variant that keeps exhaustive pixel scans cheap."""
    return PartitionSpec(
        center=Point(32.0, 24.0),
        semi_axis_x=10.0,
        semi_axis_y=7.0,
        ring_count=3,
        slice_count=8,
        canvas_width=64,
        canvas_height=48,
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance.py" not in item.nodeid:
        return
    doc = (item.function.__doc__ or "").strip()
    label = doc.splitlines()[0] if doc else item.name
    notes = [value for key, value in report.user_properties if key == "note"]
    if notes:
        label += f" [{'; '.join(str(n) for n in notes)}]"
    _acceptance_results.append((label, report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    verdicts = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}
    for label, outcome in _acceptance_results:
        terminalreporter.write_line(f"{verdicts.get(outcome, outcome.upper())}: {label}")
