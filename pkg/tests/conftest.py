from itertools import product
from math import gcd

import pytest


def enumerate_count(coeffs, b):
    """Count solutions by walking every x_i in [0, b // a_i]."""
    ranges = [range(b // a + 1) for a in coeffs]
    return sum(1 for xs in product(*ranges) if sum(a * x for a, x in zip(coeffs, xs)) == b)


def enumerate_box(coeffs, bounds, target):
    ranges = [range(u + 1) for u in bounds]
    return sum(1 for ts in product(*ranges) if sum(a * x for a, x in zip(coeffs, ts)) == target)


def enumerate_frobenius(coeffs, limit):
    """Largest b <= limit with no solution, scanning upward with a reachability sieve."""
    reach = [False] * (limit + 1)
    reach[0] = True
    for v in range(1, limit + 1):
        reach[v] = any(v >= a and reach[v - a] for a in coeffs)
    gaps = [v for v in range(limit + 1) if not reach[v]]
    return gaps[-1] if gaps else -1


@pytest.fixture
def small_tuples():
    out = []
    for a in range(1, 8):
        for b in range(a, 8):
            for c in range(b, 13):
                if gcd(a, b, c) == 1:
                    out.append((a, b, c))
    return out


# -- acceptance reporting ------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[number] = (title, report.passed, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, passed, duration = _criteria[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({duration:.2f}s)")
