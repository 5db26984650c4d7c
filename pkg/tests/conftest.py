import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ksparity.incidence import full_system  # noqa: E402
from ksparity.subsystems import resolve  # noqa: E402
from ksparity.symmetry import build_group  # noqa: E402


@pytest.fixture(scope="session")
def full():
    return full_system()


@pytest.fixture(scope="session")
def sys40():
    return resolve("40-40:6")


@pytest.fixture(scope="session")
def sys36():
    return resolve("36-36:1,1")


@pytest.fixture(scope="session")
def group(full):
    return build_group(full)


def ids_for(system, quads):
    """Basis ids of ray 4-tuples in the system's local numbering."""
    return sorted(system.basis_id(q) for q in quads)


_ACCEPTANCE: dict[int, list[tuple[str, str, float]]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        num = int(report.nodeid.split("test_criterion_")[1][:2])
        _ACCEPTANCE.setdefault(num, []).append((report.nodeid, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from test_acceptance import TITLES

    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        runs = _ACCEPTANCE[num]
        ok = all(outcome == "passed" for _, outcome, _ in runs)
        secs = sum(d for _, _, d in runs)
        terminalreporter.write_line(f"criterion {num:2d}  {'PASS' if ok else 'FAIL'}  {TITLES[num]}  ({len(runs)} run(s), {secs:.1f} s)")
