import random

import pytest

from posetdim import new_poset


def raw_random_dag(seed, n_min=2, n_max=7):
    """(elements, generating pairs) drawn with the stdlib RNG, no closure taken."""
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    density = rng.random()
    perm = list(range(n))
    rng.shuffle(perm)
    ids = [f"v{i}" for i in range(n)]
    rel = [(ids[perm[i]], ids[perm[j]])
           for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return ids, rel


@pytest.fixture
def chain3():
    return new_poset("abc", [("a", "b"), ("b", "c")])


@pytest.fixture
def antichain2():
    return new_poset("ab")


# acceptance verdicts, filled in by tests/test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def verdict(request):
    """Record PASS/FAIL for an acceptance criterion keyed by the test's ``criterion`` mark."""
    num, title = request.node.get_closest_marker("criterion").args
    ACCEPTANCE[num] = (title, "FAIL")
    yield
    rep = getattr(request.node, "rep_call", None)
    if rep is not None and rep.passed:
        ACCEPTANCE[num] = (title, "PASS")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, status = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {status}  {title}")
