"""The k[X^p]-module structure of k[X] and the matrix U(F).

k[X] is free over k[X^p] with basis {X^a : a in [0, p-1]^n}. Row ``a`` of
U(F) holds the coordinates of F^a in that basis, so rows index powers of F
and columns index basis monomials. Delta(F) = det U(F).

Determinants and adjugates of matrices over k[X^p] are computed after
contracting every exponent by p (a ring isomorphism k[X^p] -> k[X]), which
keeps degrees small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from frobjac.errors import DimensionError, Inconclusive, InvariantViolation
from frobjac.multiindex import MultiIndex, check_prime, interval_enumerate
from frobjac.polynomial import (
    PolyMap,
    PolyMatrix,
    Polynomial,
    adjugate,
    det_fraction_free,
    det_scalar,
    jacobian,
    substitute,
)


def q_exponent(p: int, n: int) -> int:
    """p^n (p - 1) / 2."""
    check_prime(p)
    if n < 1:
        raise ValueError("n must be positive")
    return p**n * (p - 1) // 2


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one identity: both sides and whether they agree."""

    holds: bool
    lhs: object
    rhs: object
    witness: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class FrobeniusDecomposition:
    """Coordinates g_a in k[X^p] with g = sum_a g_a X^a over a in [0, p-1]^n.

    Only nonzero coordinates are stored.
    """

    p: int
    n: int
    coordinates: Mapping[MultiIndex, Polynomial]

    def __getitem__(self, alpha: MultiIndex) -> Polynomial:
        return self.coordinates.get(tuple(alpha), Polynomial.zero(self.p, self.n))


def frobenius_decompose(g: Polynomial) -> FrobeniusDecomposition:
    p, n = g.p, g.n
    buckets: dict[MultiIndex, dict] = {}
    for e, c in g.terms.items():
        r = tuple(x % p for x in e)
        buckets.setdefault(r, {})[tuple(x - y for x, y in zip(e, r))] = c
    coords = {r: Polynomial._raw(p, n, t) for r, t in buckets.items()}
    return FrobeniusDecomposition(p, n, coords)


def frobenius_recompose(d: FrobeniusDecomposition) -> Polynomial:
    p, n = d.p, d.n
    out: dict = {}
    for alpha, g in d.coordinates.items():
        if len(alpha) != n or any(not 0 <= a < p for a in alpha):
            raise ValueError(f"basis index {alpha} is not in [0,{p - 1}]^{n}")
        if (g.p, g.n) != (p, n):
            raise DimensionError("coordinate lives in a different ring")
        if not g.in_frobenius_subring():
            raise ValueError(f"coordinate at {alpha} is not in k[X^p]: {g}")
        for e, c in g.terms.items():
            # supports of distinct coordinates are disjoint, so no collisions
            out[tuple(x + a for x, a in zip(e, alpha))] = c
    return Polynomial._raw(p, n, out)


def contract(f: Polynomial) -> Polynomial:
    """Map an element of k[X^p] to k[X] by dividing every exponent by p."""
    p = f.p
    if not f.in_frobenius_subring():
        raise ValueError(f"{f} is not in k[X^p]")
    return Polynomial._raw(p, f.n, {tuple(x // p for x in e): c for e, c in f.terms.items()})


def dilate(f: Polynomial) -> Polynomial:
    """Inverse of ``contract``: X^e -> X^(p e)."""
    return f.frobenius()


def u_matrix(F: PolyMap) -> PolyMatrix:
    """The p^n x p^n matrix with F^a = sum_b U[a][b] X^b."""
    p, n = F.p, F.n
    basis = interval_enumerate(0, p - 1, n)
    zero = Polynomial.zero(p, n)
    rows = []
    for alpha in basis:
        dec = frobenius_decompose(F.power(alpha)).coordinates
        rows.append([dec.get(beta, zero) for beta in basis])
    return PolyMatrix(rows, p, n)


def delta(F: PolyMap) -> Polynomial:
    """det U(F), an element of k[X^p]."""
    return dilate(det_fraction_free(u_matrix(F).map(contract)))


def verify_prop2(F: PolyMap) -> Verdict:
    """Check Delta(F) == j(F)^q, both sides computed independently."""
    lhs = delta(F)
    j = jacobian(F)
    rhs = j ** q_exponent(F.p, F.n)
    return Verdict(lhs == rhs, lhs, rhs, {"jacobian": j})


def verify_lemma2(F: PolyMap, G: PolyMap) -> Verdict:
    """Check Delta(phi_F G) == phi_F(Delta(G)) * Delta(F)."""
    if (F.p, F.n) != (G.p, G.n):
        raise DimensionError("maps live in different rings")
    composed = F.compose(G)
    lhs = delta(composed)
    dF = delta(F)
    rhs = substitute(delta(G), F) * dF
    return Verdict(lhs == rhs, lhs, rhs, {"delta_F": dF})


def linear_map(A: Sequence[Sequence[int]], p: int) -> PolyMap:
    """F = A X, with X and F as column vectors."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionError("linear map needs a square matrix")
    return PolyMap(
        Polynomial(p, n, {tuple(int(i == j) for i in range(n)): a for j, a in enumerate(row)})
        for row in A
    )


def linear_map_delta(A: Sequence[Sequence[int]], p: int) -> tuple[Polynomial, bool]:
    """Delta(AX) and whether it equals (det A)^q."""
    d = delta(linear_map(A, p))
    n = len(A)
    expected = pow(det_scalar(A, p), q_exponent(p, n), p)
    return d, d == Polynomial.constant(expected, p, n)


def is_frobenius_basis(F: PolyMap) -> bool:
    """Whether {F^a : a in [0, p-1]^n} is a basis of k[X] over k[X^p].

    Decided by the Jacobian being a nonzero constant.
    """
    j = jacobian(F)
    return bool(j) and j.is_constant()


def _representation(g: Polynomial, F: PolyMap) -> tuple[dict[MultiIndex, Polynomial], Polynomial]:
    p, n = F.p, F.n
    if (g.p, g.n) != (p, n):
        raise DimensionError("g and F live in different rings")
    basis = interval_enumerate(0, p - 1, n)
    small = u_matrix(F).map(contract)
    d = dilate(det_fraction_free(small))
    adj = adjugate(small).map(dilate)
    dec = frobenius_decompose(g).coordinates
    zero = Polynomial.zero(p, n)
    coeffs = {}
    for b, beta in enumerate(basis):
        c = zero
        for a, alpha in enumerate(basis):
            if alpha in dec and adj[a, b]:
                c = c + dec[alpha] * adj[a, b]
        coeffs[beta] = c
    if expand_in_powers(coeffs, F) != d * g:
        raise InvariantViolation(f"adjugate representation failed to re-expand for g={g}, F={F}")
    return coeffs, d


def expand_in_powers(coeffs: Mapping[MultiIndex, Polynomial], F: PolyMap) -> Polynomial:
    """sum_b coeffs[b] * F^b."""
    out = Polynomial.zero(F.p, F.n)
    for beta, c in coeffs.items():
        if c:
            out = out + c * F.power(beta)
    return out


def represent_delta_multiple(g: Polynomial, F: PolyMap) -> dict[MultiIndex, Polynomial]:
    """Coefficients c_b in k[X^p] with Delta(F) * g = sum_b c_b F^b.

    c_b = sum_a g_a adj(U(F))[a][b], where g_a are the Frobenius coordinates
    of g. Works for singular U(F) too. The identity is re-checked before
    returning; a mismatch raises ``InvariantViolation``.
    """
    return _representation(g, F)[0]


def express_in_powers(g: Polynomial, F: PolyMap) -> dict[MultiIndex, Polynomial]:
    """Coordinates of g over k[X^p] in the basis {F^b}.

    Only available when j(F) is a nonzero constant; otherwise the powers of F
    need not form a basis and ``Inconclusive`` is raised.
    """
    if not is_frobenius_basis(F):
        raise Inconclusive("j(F) is not a unit; {F^b} is not known to be a basis")
    coeffs, d = _representation(g, F)
    if not d.is_constant() or not d:
        raise InvariantViolation(f"unit Jacobian but Delta(F) = {d}")
    inv = pow(d.constant_value(), -1, F.p)
    return {beta: c.scale(inv) for beta, c in coeffs.items()}


def verify_theorem_principal_case(F: PolyMap) -> Verdict:
    """Exhibit j(F)^q = sum_b c_b F^b with every c_b in k[X^p].

    This witnesses j(F)^q in k[X^p][F], i.e. J(R)^q inside R[X^p] for R = k[F].
    """
    coeffs = represent_delta_multiple(Polynomial.one(F.p, F.n), F)
    lhs = jacobian(F) ** q_exponent(F.p, F.n)
    rhs = expand_in_powers(coeffs, F)
    in_subring = all(c.in_frobenius_subring() for c in coeffs.values())
    return Verdict(lhs == rhs and in_subring, lhs, rhs, {"coefficients": coeffs})
