import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from brauerheight.diagram import Diagram

settings.register_profile("default", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def pair_partitions(draw, n=None, m=None, max_points=8):
    """A random element of J(n, m); arities drawn when not given."""
    if n is None:
        n = draw(st.integers(0, max_points))
    if m is None:
        lo = n % 2
        m = draw(st.sampled_from([k for k in range(lo, max_points + 1, 2)] or [lo]))
    pts = list(range(1, n + 1)) + list(range(-1, -m - 1, -1))
    perm = draw(st.permutations(pts))
    return Diagram(n, m, tuple(zip(perm[::2], perm[1::2])))


@st.composite
def set_partitions(draw, n, m):
    pts = list(range(1, n + 1)) + list(range(-1, -m - 1, -1))
    labels = draw(st.lists(st.integers(0, len(pts) - 1), min_size=len(pts), max_size=len(pts)))
    blocks = {}
    for x, b in zip(pts, labels):
        blocks.setdefault(b, []).append(x)
    return Diagram(n, m, tuple(tuple(b) for b in blocks.values()))


def rng(seed=0):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[k])
