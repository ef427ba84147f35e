import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from frobjac.polynomial import PolyMap, PolyMatrix, Polynomial
from frobjac.textio import parse_map, parse_polynomial

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def P(text, p, n):
    return parse_polynomial(text, p, n)


def M(text, p, n):
    return parse_map(text, p, n)


@st.composite
def polys(draw, p, n, max_degree=3, max_terms=4):
    exps = st.tuples(*[st.integers(0, max_degree)] * n).filter(lambda e: sum(e) <= max_degree)
    terms = draw(st.dictionaries(exps, st.integers(0, p - 1), max_size=max_terms))
    return Polynomial(p, n, terms)


@st.composite
def poly_maps(draw, p, n, max_degree=3, max_terms=3):
    return PolyMap([draw(polys(p, n, max_degree, max_terms)) for _ in range(n)])


@st.composite
def poly_matrices(draw, size, p, n, max_degree=2, max_terms=3):
    return PolyMatrix(
        [[draw(polys(p, n, max_degree, max_terms)) for _ in range(size)] for _ in range(size)], p, n
    )


# (p, n) pairs small enough for property tests on U(F)
SMALL_RINGS = [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (2, 3)]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(mod.RESULTS):
        rows = mod.RESULTS[crit]
        status = "PASS" if all(ok for _, ok in rows) else "FAIL"
        tr.write_line(f"[{status}] {crit}")
        for label, ok in rows:
            tr.write_line(f"         {'ok  ' if ok else 'FAIL'} {label}")
