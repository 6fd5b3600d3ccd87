import os
import time

import pytest
from hypothesis import HealthCheck, settings

from sympower.configs import fermat, klein, star3
from sympower.syzygy import hilbert_burch

settings.register_profile("fixed", derandomize=True, max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fixed"))


@pytest.fixture(scope="session")
def fermat3():
    return fermat(3, "GF(7)")


@pytest.fixture(scope="session")
def fermat4():
    return fermat(4, "GF(13)")


@pytest.fixture(scope="session")
def fermat5():
    return fermat(5, "GF(11)")


@pytest.fixture(scope="session")
def star():
    return star3("Q")


@pytest.fixture(scope="session")
def klein11():
    return klein("GF(11)")


@pytest.fixture(scope="session")
def klein_hb(klein11):
    return hilbert_burch(klein11[0].ideal)


ACCEPTANCE: list[str] = []


class _Criterion:
    def __init__(self, label: str, description: str):
        self.label = label
        self.description = description
        self.detail = ""

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        if exc_type is AssertionError and str(exc):
            extra += f" [{str(exc).splitlines()[0]}]"
        line = f"criterion {self.label}: {status} - {self.description}{extra} in {elapsed:.2f}s"
        ACCEPTANCE.append(line)
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
