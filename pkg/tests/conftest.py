from fractions import Fraction

import pytest

from newtonbez import NewtonPolynomial


def Q(*values):
    return tuple(Fraction(v) for v in values)


@pytest.fixture
def example1():
    """Nodes (-1, 0, 2) with a = (1, 2, 3, 4), b = (5, 6, 7)."""
    nodes = Q(-1, 0, 2)
    return NewtonPolynomial(nodes, Q(1, 2, 3, 4)), NewtonPolynomial(nodes, Q(5, 6, 7))


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    label = dict(report.user_properties).get("criterion")
    if label is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[label] = report.outcome


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria):
        status = "PASS" if _criteria[label] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label}")
