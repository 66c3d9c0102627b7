from fractions import Fraction

import pytest

from markedorder import build_poset, make_marked_poset
from markedorder.conditional import make_conditions

PENTAGON_ELEMENTS = ["m0", "p", "q", "m4", "m1", "m3"]
PENTAGON_COVERS = [("m0", "p"), ("p", "q"), ("q", "m4"), ("m1", "q"), ("p", "m3")]


def pentagon_with(m1_value):
    P = build_poset(PENTAGON_ELEMENTS, PENTAGON_COVERS)
    return make_marked_poset(P, {"m0": 0, "m1": m1_value, "m3": 3, "m4": 4})


@pytest.fixture
def pentagon():
    return pentagon_with(1)


@pytest.fixture
def redundant():
    """Six elements where the cover p<q is implied by the marks."""
    P = build_poset(
        ["m0", "p", "q", "m3", "m2", "m1"],
        [("m0", "p"), ("p", "q"), ("q", "m3"), ("m2", "q"), ("p", "m1")],
    )
    return make_marked_poset(P, {"m0": 0, "m2": 2, "m1": 1, "m3": 3})


@pytest.fixture
def chain_with_conditions():
    P = build_poset(["m0", "p", "q", "r", "s", "m5"],
                    [("m0", "p"), ("p", "q"), ("q", "r"), ("r", "s"), ("s", "m5")])
    M = make_marked_poset(P, {"m0": 0, "m5": 5})
    S = make_conditions(M, [({"p": 1, "r": 1}, 4), ({"q": 1, "s": 1}, 6)])
    return M, S


def chain_point(p, q, r, s):
    return {"m0": Fraction(0), "p": Fraction(p), "q": Fraction(q),
            "r": Fraction(r), "s": Fraction(s), "m5": Fraction(5)}


# --- acceptance summary -----------------------------------------------------

_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _outcomes.setdefault(number, []).append((title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        results = _outcomes[number]
        title = results[0][0]
        ok = all(outcome == "passed" for _, outcome in results)
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
