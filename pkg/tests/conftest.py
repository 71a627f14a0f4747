import pytest
from hypothesis import settings

from bslab.tableaux import Tableau
from bslab.word import Shape, longest_word


@pytest.fixture
def shape3():
    return Shape(longest_word(3), (1, 1, 1))


@pytest.fixture
def w4():
    return longest_word(4)


@pytest.fixture
def contra_t3(w4):
    """The contra-tableau of shape (4,4,4,4,4)/(3,3,3,2,1), top block of m=(1,2,1,1,1,3)."""
    return Tableau.from_shape(Shape(w4, (0, 0, 0, 1, 1, 3)), [(1,), (1,), (2,), (1, 2), (1, 3, 4)])


@pytest.fixture
def block_parts(w4, contra_t3):
    t1 = Tableau.from_shape(Shape(w4, (1, 0, 0, 0, 0, 0)), [(1,)])
    t2 = Tableau.from_shape(Shape(w4, (0, 2, 1, 0, 0, 0)), [(2,), (1, 3), (2, 3)])
    return [t1, t2, contra_t3]


@pytest.fixture
def small_parts():
    """The same three factors, each in its own smallest rank (sizes 2, 3, 4)."""
    t1 = Tableau.from_shape(Shape(longest_word(2), (1,)), [(1,)])
    t2 = Tableau.from_shape(Shape(longest_word(3), (0, 2, 1)), [(2,), (1, 3), (2, 3)])
    t3 = Tableau.from_shape(Shape(longest_word(4), (0, 0, 0, 1, 1, 3)), [(1,), (1,), (2,), (1, 2), (1, 3, 4)])
    return [t1, t2, t3]


# sympy oracles make the first example of a run slow
settings.register_profile("bslab", deadline=None)
settings.load_profile("bslab")


_acceptance: dict[int, tuple[str, list[str]]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None or report.when not in ("setup", "call") or (report.when == "setup" and report.passed):
        return
    number, title = marker
    entry = _acceptance.setdefault(number, (title, []))
    entry[1].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result().acceptance = (marker.args[0], marker.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, outcomes = _acceptance[number]
        status = "PASS" if outcomes and all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
