import pytest
from hypothesis import HealthCheck, settings

from cyclogrs.galois import make_field

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def gf16():
    return make_field(2, 4)


@pytest.fixture(scope="session")
def gf125():
    return make_field(5, 3)


@pytest.fixture(scope="session")
def gf243():
    return make_field(3, 5)


@pytest.fixture(scope="session")
def gf256():
    return make_field(2, 8)


# --- acceptance criteria summary ------------------------------------------------

_CRITERIA: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, title = marker.args
    entry = _CRITERIA.setdefault(n, [title, True, False])
    if rep.failed:
        entry[1] = False
    if rep.when == "call":
        entry[2] = True


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok, ran = _CRITERIA[n]
        status = "PASS" if ok and ran else ("FAIL" if ran or not ok else "NOT RUN")
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
