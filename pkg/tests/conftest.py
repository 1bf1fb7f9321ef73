import random
import sys

from hypothesis import HealthCheck, settings, strategies as st

from twisted_schubert import MultiPoly, Permutation

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def P(text):
    return Permutation.parse(text)


@st.composite
def perms(draw, n_min=1, n_max=5, n=None):
    size = n if n is not None else draw(st.integers(n_min, n_max))
    images = draw(st.permutations(list(range(1, size + 1))))
    return Permutation(tuple(images))


@st.composite
def polys(draw, n=3, max_degree=4, max_terms=5, with_y=False):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        xe = draw(st.lists(st.integers(0, max_degree), min_size=n, max_size=n))
        ye = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)) if with_y else [0] * n
        terms[tuple(xe) + tuple(ye)] = draw(st.integers(-5, 5))
    return MultiPoly(n, terms)


def rng(seed=0):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report():
        terminalreporter.write_line(line)
