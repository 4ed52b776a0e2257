from functools import lru_cache

import pytest

from ringcones.category import build_category
from ringcones.ring import parse_ring_spec

CORPUS = ["zmod:2", "zmod:4", "zmod:6", "zmod:12", "prod:zmod:2,zmod:2", "mat:2:zmod:2"]
RR_PASSING = ["zmod:2", "zmod:6", "prod:zmod:2,zmod:2", "mat:2:zmod:2"]
RR_FAILING = ["zmod:4", "zmod:12"]


@lru_cache(maxsize=None)
def ring(spec):
    return parse_ring_spec(spec)


@lru_cache(maxsize=None)
def category(spec, side="left"):
    return build_category(ring(spec), side)


@pytest.fixture(params=CORPUS)
def corpus_spec(request):
    return request.param


# one PASS/FAIL line per acceptance criterion at the end of the run
_criteria: dict[str, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _criteria.setdefault(str(marker.args[0]), []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=int):
        results = _criteria[key]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {status} ({sum(results)}/{len(results)} cases)")
