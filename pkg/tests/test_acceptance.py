"""Exit criteria. All identities are exact over F_p (zero tolerance).

Run alone with ``pytest tests/test_acceptance.py -s``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import random
import subprocess
import sys
import time

import pytest

from frobjac.frobenius import delta, u_matrix
from frobjac.harness import SessionConfig, random_scalar_matrix, run_verification
from frobjac.polynomial import PolyMatrix, Polynomial, det_cofactor, det_fraction_free, det_scalar
from frobjac.textio import parse_map, parse_polynomial
from frobjac.wronskian import c_p_constant, q_matrix

pytestmark = pytest.mark.acceptance

RESULTS: dict[str, list[tuple[str, bool]]] = {}


def record(criterion: str, label: str, ok: bool) -> None:
    RESULTS.setdefault(criterion, []).append((label, ok))


def verify(criterion, law, p, n, trials, **kw):
    cfg = SessionConfig(p=p, n=n, trials=trials, seed=0, **kw)
    report = run_verification(law, cfg)
    record(criterion, f"{law} p={p} n={n}: {report.trials - report.failures}/{report.trials}", report.passed)
    assert report.passed, report.first_counterexample
    return report


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_c01_prop2(p, n):
    verify("01 Delta(F) = j(F)^q", "prop2", p, n, 100, max_degree=3, max_terms=4)


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_c02_lemma4(p, n):
    verify("02 det W = c_p^n Delta(F), W = Q U^T", "lemma4", p, n, 25)


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (3, 1)])
def test_c03_lemma2(p, n):
    r = verify("03 Delta multiplicativity", "lemma2", p, n, 100)
    singular = r.tag_counts.get("delta_F_zero", 0)
    record("03 Delta multiplicativity", f"  pairs with Delta(F) = 0: {singular}", singular >= 1)
    assert singular >= 1


@pytest.mark.parametrize("p, n", [(2, 2), (3, 2), (5, 1)])
def test_c04_lemma3(p, n):
    verify("04 Delta(AX) = (det A)^q", "lemma3", p, n, 100)
    cfg = SessionConfig(p=p, n=n, trials=100, seed=0)
    singular = sum(det_scalar(random_scalar_matrix(cfg, t), p) == 0 for t in range(100))
    record("04 Delta(AX) = (det A)^q", f"  singular A: {singular}", singular >= 10)
    assert singular >= 10


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (3, 1)])
def test_c05_nousiainen(p, n):
    r = verify("05 basis criterion", "nousiainen", p, n, 100)
    positives = r.tag_counts.get("basis", 0)
    record("05 basis criterion", f"  basis-positive maps (x_i reproduced): {positives}", positives >= 1)
    assert positives >= 1


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (3, 1)])
def test_c06_prop3(p, n):
    r = verify("06 adjugate representation", "prop3", p, n, 100)
    degenerate = r.tag_counts.get("delta_zero", 0)
    record("06 adjugate representation", f"  instances with Delta(F) = 0: {degenerate}", degenerate >= 10)
    assert degenerate >= 10


@pytest.mark.parametrize("p", [5, 7])
def test_c07_lemma1(p):
    verify("07 binomial-derivation sums", "lemma1", p, 2, 20)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_c08_formula5(p):
    verify("08 univariate Wronskian formula", "formula5", p, 1, 20, max_degree=4, max_terms=5)


@pytest.mark.parametrize("p, n", [(2, 2), (3, 1), (3, 2)])
def test_c09_blocks(p, n):
    verify("09 T unitriangular, block structure", "prop1-blocks", p, n, 20)


@pytest.mark.parametrize("size", [2, 3, 4, 5])
def test_c10_determinant_oracle(size):
    p, n = 3, 2
    rng = random.Random(1000 + size)
    monos = [(a, b) for a in range(3) for b in range(3) if a + b <= 2]
    agree = 0
    for _ in range(100):
        rows = [
            [Polynomial(p, n, {rng.choice(monos): rng.randrange(p) for _ in range(3)}) for _ in range(size)]
            for _ in range(size)
        ]
        A = PolyMatrix(rows, p, n)
        agree += det_fraction_free(A) == det_cofactor(A)
    record("10 Bareiss = cofactor", f"size {size}: {agree}/100", agree == 100)
    assert agree == 100


def test_c11_golden_fixtures():
    c = "11 golden fixtures"
    F = parse_map("x1 + x2; x1*x2", 2, 2)
    ok = delta(F) == parse_polynomial("x1^2 + x2^2", 2, 2)
    record(c, "Delta(x+y, xy) = x^2 + y^2 at p=2", ok)
    U = u_matrix(parse_map("x + x^2", 2, 1))
    ok2 = U.to_strings() == [["1", "0"], ["x1^2", "1"]]
    record(c, "U(x + x^2) = [[1,0],[x^2,1]] at p=2", ok2)
    ok3 = c_p_constant(5) == 3
    record(c, "c_5 = 3", ok3)
    ok4 = det_fraction_free(q_matrix(3, 1)) == 2
    record(c, "det Q(p=3, n=1) = 2", ok4)
    assert ok and ok2 and ok3 and ok4


def test_c12_determinism():
    cmd = [sys.executable, "-m", "frobjac", "verify", "prop2", "-p", "2", "-n", "2",
           "--seed", "42", "--trials", "50", "--output", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    record("12 byte-identical JSON reports", f"{len(a)} bytes, identical={a == b}", a == b)
    assert a == b


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (3, 1)])
def test_c13_principal_case(p, n):
    verify("13 principal case R = k[F] (theorem-kf)", "theorem-kf", p, n, 100)


def test_c01_runtime_budget():
    start = time.perf_counter()
    for p, n in [(3, 2), (2, 3)]:
        run_verification("prop2", SessionConfig(p=p, n=n, trials=100, seed=1))
    elapsed = time.perf_counter() - start
    record("01 Delta(F) = j(F)^q", f"  slowest configs (3,2)+(2,3), 200 maps: {elapsed:.1f}s", elapsed < 300)
    assert elapsed < 300
