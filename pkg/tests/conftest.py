from math import gcd

import pytest

from quadprime.symbols import jacobi

FAMILY_DS = (-3, -2, -1, 2, 3, 5)
FAMILY_PS = (3, 5, 7)


def form_family(limit, ps=FAMILY_PS, m_max=50, ds=FAMILY_DS):
    """(D, m, p, l, N) with N = m p^l - 1 <= limit, m even, gcd(m, p) = 1, (D/N) = -1."""
    out = []
    for p in ps:
        for m in range(2, m_max + 1, 2):
            if gcd(m, p) != 1:
                continue
            l = 1
            while m * p**l - 1 <= limit:
                N = m * p**l - 1
                for D in ds:
                    if jacobi(D, N) == -1:
                        out.append((D, m, p, l, N))
                l += 1
    return out


def naive_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@pytest.fixture(scope="session")
def family_1e5():
    return form_family(10**5)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
