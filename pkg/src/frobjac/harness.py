"""Session configuration, seeded random instances and the verification laws.

Every trial draws from ``random.Random(trial_seed(seed, trial, stream))``.
``trial_seed`` is the splitmix64 finalizer applied to

    seed + 0x9E3779B97F4A7C15 * (trial + 1) + 0xD1B54A32D192ED03 * stream  (mod 2^64)

so any single trial can be replayed from (seed, trial) alone. Streams keep
independent draws within one trial apart (0: the map F, 1: a second map G,
2: a polynomial g, 3: derivation indices).
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable

from frobjac import frobenius as fb
from frobjac import wronskian as wr
from frobjac.errors import Inconclusive, InvariantViolation
from frobjac.multiindex import SIZE_CAP, glex_key, is_prime
from frobjac.polynomial import PolyMap, Polynomial
from frobjac.textio import print_canonical

MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SessionConfig:
    p: int = 2
    n: int = 1
    seed: int = 0
    trials: int = 100
    max_degree: int = 3
    max_terms: int = 4
    output: str = "text"

    def __post_init__(self):
        if not (is_prime(self.p) and 2 <= self.p <= 13):
            raise ValueError(f"p must be a prime in [2, 13], got {self.p}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.p**self.n > SIZE_CAP:
            raise ValueError(f"p^n = {self.p ** self.n} exceeds {SIZE_CAP}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.max_degree < 0 or self.max_terms < 1:
            raise ValueError("max_degree must be >= 0 and max_terms >= 1")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.output not in ("text", "json"):
            raise ValueError(f"unknown output mode {self.output!r}")


def splitmix64(x: int) -> int:
    x &= MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def trial_seed(seed: int, trial: int, stream: int = 0) -> int:
    return splitmix64(seed + 0x9E3779B97F4A7C15 * (trial + 1) + 0xD1B54A32D192ED03 * stream)


def trial_rng(config: SessionConfig, trial: int, stream: int = 0) -> random.Random:
    return random.Random(trial_seed(config.seed, trial, stream))


@lru_cache(maxsize=None)
def _monomials(n: int, max_degree: int, step: int = 1) -> tuple:
    """Exponents of total degree <= max_degree whose entries are multiples of step."""
    out = [()]
    for _ in range(n):
        out = [e + (k,) for e in out for k in range(0, max_degree - sum(e) + 1, step)]
    return tuple(sorted(out, key=glex_key))


def random_poly(rng: random.Random, p: int, n: int, max_degree: int, max_terms: int, step: int = 1) -> Polynomial:
    """Up to max_terms monomials of degree <= max_degree, coefficients uniform in [0, p-1]."""
    pool = _monomials(n, max_degree, step)
    terms: dict = {}
    for _ in range(max_terms):
        e = rng.choice(pool)
        terms[e] = rng.randrange(p)
    return Polynomial(p, n, terms)


def random_poly_map(config: SessionConfig, trial: int, stream: int = 0) -> PolyMap:
    """A random map; every 10th trial follows a template.

    trial % 10 == 0: f_i = x_i + (element of k[X^p]), so j(F) = 1.
    trial % 10 == 5: f_1 lies in k[X^p], so j(F) = 0.
    """
    p, n, d, t = config.p, config.n, config.max_degree, config.max_terms
    rng = trial_rng(config, trial, stream)
    comps = [random_poly(rng, p, n, d, t) for _ in range(n)]
    if trial % 10 == 0 and d >= 1:
        comps = [
            Polynomial.variable(i, p, n) + (random_poly(rng, p, n, d, t - 1, step=p) if t > 1 else 0)
            for i in range(n)
        ]
    elif trial % 10 == 5:
        comps[0] = random_poly(rng, p, n, d, t, step=p)
    return PolyMap(comps)


def random_scalar_matrix(config: SessionConfig, trial: int) -> list[list[int]]:
    """Uniform n x n matrix over F_p; forced singular when trial % 5 == 0."""
    p, n = config.p, config.n
    rng = trial_rng(config, trial)
    A = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
    if trial % 5 == 0:
        if n == 1:
            A = [[0]]
        else:
            c = rng.randrange(p)
            A[1] = [c * x % p for x in A[0]]
    return A


def render_map(F: PolyMap) -> str:
    return "(" + "; ".join(print_canonical(f) for f in F) + ")"


@dataclass
class TrialOutcome:
    ok: bool
    detail: str = ""
    tags: tuple = ()


def _mismatch(what: str, lhs, rhs) -> str:
    return f"{what}: lhs = {lhs}, rhs = {rhs}"


def _law_prop2(cfg: SessionConfig, trial: int) -> TrialOutcome:
    F = random_poly_map(cfg, trial)
    v = fb.verify_prop2(F)
    return TrialOutcome(v.holds, _mismatch(f"F = {render_map(F)}", v.lhs, v.rhs))


def _law_lemma2(cfg: SessionConfig, trial: int) -> TrialOutcome:
    F = random_poly_map(cfg, trial)
    G = random_poly_map(cfg, trial, stream=1)
    v = fb.verify_lemma2(F, G)
    tags = ("delta_F_zero",) if not v.witness["delta_F"] else ()
    return TrialOutcome(v.holds, _mismatch(f"F = {render_map(F)}, G = {render_map(G)}", v.lhs, v.rhs), tags)


def _law_lemma3(cfg: SessionConfig, trial: int) -> TrialOutcome:
    A = random_scalar_matrix(cfg, trial)
    d, ok = fb.linear_map_delta(A, cfg.p)
    tags = ("singular",) if not d else ()
    return TrialOutcome(ok, f"A = {A}: Delta = {d}", tags)


def _law_lemma4(cfg: SessionConfig, trial: int) -> TrialOutcome:
    F = random_poly_map(cfg, trial)
    v = wr.verify_lemma4(F)
    return TrialOutcome(
        v.holds, _mismatch(f"F = {render_map(F)} (W = Q U^T: {v.witness['factorization']})", v.lhs, v.rhs)
    )


def _law_nousiainen(cfg: SessionConfig, trial: int) -> TrialOutcome:
    F = random_poly_map(cfg, trial)
    basis = fb.is_frobenius_basis(F)
    d = fb.delta(F)
    unit_delta = bool(d) and d.is_constant()
    if basis != unit_delta:
        return TrialOutcome(False, f"F = {render_map(F)}: basis = {basis} but Delta = {d}")
    if not basis:
        return TrialOutcome(True, tags=("non_basis",))
    for i in range(cfg.n):
        x = Polynomial.variable(i, cfg.p, cfg.n)
        coeffs = fb.express_in_powers(x, F)
        if fb.expand_in_powers(coeffs, F) != x:
            return TrialOutcome(False, f"F = {render_map(F)}: x{i + 1} not reproduced")
        if not all(c.in_frobenius_subring() for c in coeffs.values()):
            return TrialOutcome(False, f"F = {render_map(F)}: coefficient for x{i + 1} outside k[X^p]")
    return TrialOutcome(True, tags=("basis",))


def _law_prop3(cfg: SessionConfig, trial: int) -> TrialOutcome:
    F = random_poly_map(cfg, trial)
    g = random_poly(trial_rng(cfg, trial, 2), cfg.p, cfg.n, cfg.max_degree, cfg.max_terms)
    coeffs = fb.represent_delta_multiple(g, F)
    d = fb.delta(F)
    lhs, rhs = fb.expand_in_powers(coeffs, F), d * g
    ok = lhs == rhs and all(c.in_frobenius_subring() for c in coeffs.values())
    tags = ("delta_zero",) if not d else ()
    return TrialOutcome(ok, _mismatch(f"g = {g}, F = {render_map(F)}", lhs, rhs), tags)


def _law_theorem_kf(cfg: SessionConfig, trial: int) -> TrialOutcome:
    F = random_poly_map(cfg, trial)
    v = fb.verify_theorem_principal_case(F)
    return TrialOutcome(v.holds, _mismatch(f"F = {render_map(F)}", v.lhs, v.rhs))


def _law_lemma1(cfg: SessionConfig, trial: int) -> TrialOutcome:
    f = random_poly(trial_rng(cfg, trial), cfg.p, cfg.n, cfg.max_degree, cfg.max_terms)
    rng = trial_rng(cfg, trial, 3)
    top = min(4, cfg.p - 1)
    for m in range(top + 1):
        for l in range(m + 1):
            idx = [rng.randint(1, cfg.n) for _ in range(l)]
            v = wr.verify_lemma1(f, idx, m)
            if not v.holds:
                return TrialOutcome(False, _mismatch(f"f = {f}, D = {idx}, m = {m}", v.lhs, v.rhs))
    return TrialOutcome(True)


def _law_formula5(cfg: SessionConfig, trial: int) -> TrialOutcome:
    if cfg.n != 1:
        raise ValueError("formula5 needs n = 1")
    f = random_poly(trial_rng(cfg, trial), cfg.p, 1, cfg.max_degree, cfg.max_terms)
    for r in range(1, min(cfg.p, 4) + 1):
        v = wr.univariate_power_wronskian_check(f, r)
        if not v.holds:
            return TrialOutcome(False, _mismatch(f"f = {f}, r = {r}", v.lhs, v.rhs))
    return TrialOutcome(True)


def _law_prop1_blocks(cfg: SessionConfig, trial: int) -> TrialOutcome:
    F = random_poly_map(cfg, trial)
    v = wr.verify_prop1_blocks(F, cfg.p)
    return TrialOutcome(v.holds, _mismatch(f"F = {render_map(F)} ({v.witness})", v.lhs, v.rhs))


LAWS: dict[str, Callable[[SessionConfig, int], TrialOutcome]] = {
    "lemma1": _law_lemma1,
    "prop1-blocks": _law_prop1_blocks,
    "formula5": _law_formula5,
    "lemma2": _law_lemma2,
    "lemma3": _law_lemma3,
    "lemma4": _law_lemma4,
    "prop2": _law_prop2,
    "nousiainen": _law_nousiainen,
    "prop3": _law_prop3,
    "theorem-kf": _law_theorem_kf,
}


@dataclass
class VerificationReport:
    law: str
    trials: int
    failures: int
    first_counterexample: str | None
    seeds: list[int]
    tag_counts: dict[str, int] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        d.pop("seconds")
        d["passed"] = self.passed
        if not timing:
            return d
        return d | {"seconds": self.seconds}


def run_verification(law: str, config: SessionConfig) -> VerificationReport:
    if law not in LAWS:
        raise KeyError(f"unknown law {law!r}; choose from {', '.join(LAWS)}")
    check = LAWS[law]
    start = time.perf_counter()
    failures, first = 0, None
    tags: dict[str, int] = {}
    for t in range(config.trials):
        try:
            out = check(config, t)
        except (InvariantViolation, Inconclusive) as exc:
            out = TrialOutcome(False, f"trial {t}: {type(exc).__name__}: {exc}")
        for tag in out.tags:
            tags[tag] = tags.get(tag, 0) + 1
        if not out.ok:
            failures += 1
            if first is None:
                first = f"trial {t}: {out.detail}"
    return VerificationReport(
        law,
        config.trials,
        failures,
        first,
        [trial_seed(config.seed, t) for t in range(config.trials)],
        dict(sorted(tags.items())),
        time.perf_counter() - start,
    )

