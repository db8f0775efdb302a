import pytest
from hypothesis import settings, strategies as st

from braidforge import BraidWord

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ACCEPTANCE_RESULTS: dict[str, str] = {}


@st.composite
def braid_words(draw, min_strands=2, max_strands=5, max_len=12, positive=True):
    n = draw(st.integers(min_strands, max_strands))
    gen = st.integers(1, n - 1)
    if not positive:
        gen = st.tuples(gen, st.booleans()).map(lambda t: t[0] if t[1] else -t[0])
    letters = draw(st.lists(gen, max_size=max_len))
    return BraidWord(n, tuple(letters))


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion's outcome for the terminal summary."""
    name = request.node.get_closest_marker("criterion").args[0]
    yield
    rep = getattr(request.node, "rep_call", None)
    ACCEPTANCE_RESULTS[name] = "PASS" if rep is not None and rep.passed else "FAIL"


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[name]}  {name}")
