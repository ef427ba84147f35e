"""Sparse multivariate polynomials over F_p and matrices of them.

Polynomials store a dict ``{exponent tuple: coefficient}`` with coefficients
in ``1..p-1``; zero coefficients are never stored. Values are treated as
immutable once built.
"""

from __future__ import annotations

import heapq
from itertools import combinations
from operator import add as _add
from typing import Iterable, Iterator, Mapping, Sequence

from frobjac.errors import DimensionError
from frobjac.multiindex import (
    MultiIndex,
    check_prime,
    glex_key,
    leq,
    sub,
    unit,
)

NEG_INF = float("-inf")


def _mul_terms(a: Mapping, b: Mapping, p: int) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple(map(_add, ea, eb))
            out[e] = get(e, 0) + ca * cb
    return {e: c % p for e, c in out.items() if c % p}


class Polynomial:
    """An element of F_p[x_1, ..., x_n]."""

    __slots__ = ("p", "n", "terms", "_hash")

    def __init__(self, p: int, n: int, terms: Mapping[Sequence[int], int] | None = None):
        check_prime(p)
        if n < 1:
            raise ValueError("need at least one variable")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n or any(x < 0 for x in e):
                raise DimensionError(f"exponent {e} does not fit {n} variables")
            c = (clean.get(e, 0) + int(c)) % p
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self.p, self.n, self.terms = p, n, clean
        self._hash = None

    @classmethod
    def _raw(cls, p: int, n: int, terms: dict) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.p, obj.n, obj.terms, obj._hash = p, n, terms, None
        return obj

    # constructors

    @classmethod
    def zero(cls, p: int, n: int) -> "Polynomial":
        return cls(p, n)

    @classmethod
    def constant(cls, c: int, p: int, n: int) -> "Polynomial":
        return cls(p, n, {(0,) * n: c})

    @classmethod
    def one(cls, p: int, n: int) -> "Polynomial":
        return cls.constant(1, p, n)

    @classmethod
    def variable(cls, i: int, p: int, n: int) -> "Polynomial":
        """The coordinate x_{i+1} (0-based ``i``)."""
        if not 0 <= i < n:
            raise DimensionError(f"variable index {i} out of range for n={n}")
        return cls(p, n, {unit(i, n): 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], p: int, c: int = 1) -> "Polynomial":
        return cls(p, len(exponent), {tuple(exponent): c})

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> int:
        return self.terms.get((0,) * self.n, 0)

    def degree(self) -> int | float:
        """Total degree; ``float('-inf')`` for the zero polynomial."""
        return max(map(sum, self.terms), default=NEG_INF)

    def leading(self) -> tuple[MultiIndex, int]:
        e = max(self.terms, key=glex_key)
        return e, self.terms[e]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "Polynomial") -> None:
        if self.p != other.p or self.n != other.n:
            raise DimensionError(
                f"mismatched rings F_{self.p}[{self.n} vars] and F_{other.p}[{other.n} vars]"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self.p, self.n)
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(p, self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.p
        return Polynomial._raw(p, self.n, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c: int) -> "Polynomial":
        p = self.p
        c %= p
        if not c:
            return Polynomial._raw(p, self.n, {})
        return Polynomial._raw(p, self.n, {e: v * c % p for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Polynomial._raw(self.p, self.n, {})
        return Polynomial._raw(self.p, self.n, _mul_terms(self.terms, other.terms, self.p))

    __rmul__ = __mul__

    def frobenius(self) -> "Polynomial":
        """The p-th power, computed as sum of c * X^(p e) (coefficients are fixed by Fermat)."""
        p = self.p
        return Polynomial._raw(p, self.n, {tuple(p * x for x in e): c for e, c in self.terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative int, got {k!r}")
        result = Polynomial.one(self.p, self.n)
        base = self
        # base-p digits: f^(d0 + d1 p + ...) = f^d0 * (f^p)^d1 * ...
        while k:
            k, d = divmod(k, self.p)
            for _ in range(d):
                result = result * base
            if k:
                base = base.frobenius()
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == Polynomial.constant(other, self.p, self.n).terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.p == other.p and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.n, frozenset(self.terms.items())))
        return self._hash

    def __str__(self) -> str:
        from frobjac.textio import print_canonical

        return print_canonical(self)

    def __repr__(self) -> str:
        return f"Polynomial(p={self.p}, n={self.n}, {self})"

    # calculus

    def derive(self, alpha: Sequence[int]) -> "Polynomial":
        return derive(self, alpha)

    def in_frobenius_subring(self) -> bool:
        """True iff every exponent is divisible by p, i.e. self lies in k[X^p]."""
        p = self.p
        return all(x % p == 0 for e in self.terms for x in e)


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient a / b, which must be exact; raises ``ArithmeticError`` otherwise."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p, n = a.p, a.n
    lead, lc = b.leading()
    inv = pow(lc, -1, p)
    if len(b.terms) == 1 and not any(lead):
        return a.scale(inv)
    rem = dict(a.terms)
    heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
    heapq.heapify(heap)
    quot: dict = {}
    bterms = list(b.terms.items())
    while heap:
        _, neg = heapq.heappop(heap)
        e = tuple(-x for x in neg)
        c = rem.pop(e, 0)
        if not c:
            continue
        if not leq(lead, e):
            raise ArithmeticError("polynomial division is not exact")
        t = sub(e, lead)
        qc = c * inv % p
        quot[t] = qc
        for eb, cb in bterms:
            if eb == lead:
                continue
            e2 = tuple(map(_add, t, eb))
            v = (rem.get(e2, 0) - qc * cb) % p
            if v:
                if e2 not in rem:
                    heapq.heappush(heap, (-sum(e2), tuple(-x for x in e2)))
                rem[e2] = v
            else:
                rem.pop(e2, None)
    return Polynomial._raw(p, n, quot)


def derive(f: Polynomial, alpha: Sequence[int]) -> Polynomial:
    """Apply d^alpha = prod_i (d/dx_i)^alpha_i; falling factorials reduced mod p."""
    alpha = tuple(alpha)
    if len(alpha) != f.n:
        raise DimensionError(f"derivative order {alpha} does not fit {f.n} variables")
    p = f.p
    out = {}
    for e, c in f.terms.items():
        if not leq(alpha, e):
            continue
        for x, a in zip(e, alpha):
            for k in range(a):
                c = c * (x - k) % p
            if not c:
                break
        if c:
            out[sub(e, alpha)] = c
    return Polynomial._raw(p, f.n, out)


class PolyMap:
    """A square tuple F = (f_1, ..., f_n) of polynomials in n variables."""

    __slots__ = ("components", "p", "n")

    def __init__(self, components: Iterable[Polynomial]):
        comps = tuple(components)
        if not comps:
            raise ValueError("empty map")
        p, n = comps[0].p, comps[0].n
        if any(f.p != p or f.n != n for f in comps):
            raise DimensionError("map components live in different rings")
        if len(comps) != n:
            raise DimensionError(f"map has {len(comps)} components but {n} variables")
        self.components, self.p, self.n = comps, p, n

    @classmethod
    def identity(cls, p: int, n: int) -> "PolyMap":
        return cls(Polynomial.variable(i, p, n) for i in range(n))

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.components)

    def __getitem__(self, i: int) -> Polynomial:
        return self.components[i]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMap) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return "PolyMap(" + "; ".join(map(str, self.components)) + ")"

    def power(self, alpha: Sequence[int]) -> Polynomial:
        return monomial_power(self, alpha)

    def compose(self, G: "PolyMap") -> "PolyMap":
        """The map phi_F(G) = (G_1(F), ..., G_n(F))."""
        return PolyMap(substitute(g, self) for g in G)


def monomial_power(F: PolyMap, alpha: Sequence[int]) -> Polynomial:
    """F^alpha = prod_i f_i^alpha_i."""
    if len(alpha) != F.n:
        raise DimensionError(f"multiindex {tuple(alpha)} does not fit a map of size {F.n}")
    out = Polynomial.one(F.p, F.n)
    for f, a in zip(F, alpha):
        if a:
            out = out * f**a
    return out


def substitute(g: Polynomial, F: PolyMap) -> Polynomial:
    """Image of g under the endomorphism x_i -> f_i."""
    g._check(F[0])
    p, n = g.p, g.n
    powers: list[dict[int, Polynomial]] = [{0: Polynomial.one(p, n)} for _ in range(n)]

    def pw(i: int, k: int) -> Polynomial:
        cache = powers[i]
        if k not in cache:
            cache[k] = pw(i, k - 1) * F[i]
        return cache[k]

    out = Polynomial.zero(p, n)
    for e, c in g.terms.items():
        term = Polynomial.constant(c, p, n)
        for i, k in enumerate(e):
            if k:
                term = term * pw(i, k)
        out = out + term
    return out


class PolyMatrix:
    """A dense r x c matrix of polynomials over a common ring."""

    __slots__ = ("rows", "p", "n")

    def __init__(self, rows: Iterable[Iterable[Polynomial]], p: int | None = None, n: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        if rows and rows[0]:
            p0, n0 = rows[0][0].p, rows[0][0].n
            if any(x.p != p0 or x.n != n0 for r in rows for x in r):
                raise DimensionError("matrix entries live in different rings")
            p, n = p0, n0
        if p is None or n is None:
            raise ValueError("empty matrix needs explicit p and n")
        self.rows, self.p, self.n = rows, p, n

    @classmethod
    def identity(cls, size: int, p: int, n: int) -> "PolyMatrix":
        one, zero = Polynomial.one(p, n), Polynomial.zero(p, n)
        return cls(((one if i == j else zero) for j in range(size)) for i in range(size))

    @classmethod
    def zeros(cls, r: int, c: int, p: int, n: int) -> "PolyMatrix":
        zero = Polynomial.zero(p, n)
        return cls(((zero,) * c for _ in range(r)), p, n)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.rows), self.p, self.n)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        (r, k), (k2, c) = self.shape, other.shape
        if k != k2:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        zero = Polynomial.zero(self.p, self.n)
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a.terms and b.terms:
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return PolyMatrix(out, self.p, self.n)

    def scale(self, c: Polynomial) -> "PolyMatrix":
        return PolyMatrix(((c * x for x in r) for r in self.rows), self.p, self.n)

    def map(self, fn) -> "PolyMatrix":
        out = [[fn(x) for x in r] for r in self.rows]
        first = out[0][0] if out and out[0] else None
        return PolyMatrix(out, first.p if first else self.p, first.n if first else self.n)

    def minor(self, i: int, j: int) -> "PolyMatrix":
        """Delete row i and column j."""
        return PolyMatrix(
            (r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i), self.p, self.n
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(((self.rows[i][j] for j in cols) for i in rows), self.p, self.n)

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self) -> str:
        return f"PolyMatrix({self.to_strings()})"


def jacobian_matrix(F: PolyMap) -> PolyMatrix:
    """n x n matrix with (i, j) entry d f_i / d x_j."""
    n = F.n
    return PolyMatrix(((derive(f, unit(j, n)) for j in range(n)) for f in F), F.p, n)


def jacobian(F: PolyMap) -> Polynomial:
    return det_fraction_free(jacobian_matrix(F))


def det_fraction_free(M: PolyMatrix) -> Polynomial:
    """Bareiss elimination; the pivot is the nonzero column entry with fewest terms."""
    if not M.is_square():
        raise DimensionError(f"determinant of non-square {M.shape} matrix")
    size = M.shape[0]
    p, n = M.p, M.n
    if size == 0:
        return Polynomial.one(p, n)
    A = [list(r) for r in M.rows]
    sign = 1
    prev = Polynomial.one(p, n)
    for k in range(size - 1):
        candidates = [(len(A[i][k].terms), i) for i in range(k, size) if A[i][k].terms]
        if not candidates:
            return Polynomial.zero(p, n)
        _, piv = min(candidates)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        akk, rowk = A[k][k], A[k]
        for i in range(k + 1, size):
            aik, rowi = A[i][k], A[i]
            for j in range(k + 1, size):
                num = akk * rowi[j]
                if aik.terms and rowk[j].terms:
                    num = num - aik * rowk[j]
                rowi[j] = exact_div(num, prev) if num.terms else num
        prev = akk
    det = A[-1][-1]
    return det if sign > 0 else -det


#: Largest matrix side accepted by the Laplace-expansion oracle.
COFACTOR_CAP = 6


def det_cofactor(M: PolyMatrix) -> Polynomial:
    """Laplace expansion along the first row (reference oracle, small sizes only)."""
    if not M.is_square():
        raise DimensionError(f"determinant of non-square {M.shape} matrix")
    if M.shape[0] > COFACTOR_CAP:
        raise ValueError(f"cofactor oracle limited to size {COFACTOR_CAP}")
    return _laplace([list(r) for r in M.rows], M.p, M.n)


def _laplace(rows: list[list[Polynomial]], p: int, n: int) -> Polynomial:
    size = len(rows)
    if size == 0:
        return Polynomial.one(p, n)
    if size == 1:
        return rows[0][0]
    total = Polynomial.zero(p, n)
    for j, a in enumerate(rows[0]):
        if not a.terms:
            continue
        sub_rows = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _laplace(sub_rows, p, n)
        total = total + term if j % 2 == 0 else total - term
    return total


def adjugate(M: PolyMatrix) -> PolyMatrix:
    """Classical adjugate: adj(M)_{ij} = (-1)^(i+j) det(M with row j, column i removed)."""
    if not M.is_square():
        raise DimensionError(f"adjugate of non-square {M.shape} matrix")
    size = M.shape[0]
    if size == 1:
        return PolyMatrix.identity(1, M.p, M.n)
    cof = [[det_fraction_free(M.minor(i, j)) for j in range(size)] for i in range(size)]
    return PolyMatrix(
        ((cof[j][i] if (i + j) % 2 == 0 else -cof[j][i] for j in range(size)) for i in range(size)),
        M.p,
        M.n,
    )


def jacobian_ideal_generators(G: Sequence[Polynomial]) -> list[Polynomial]:
    """j(F) for every n-element subsequence F of G, in itertools.combinations order."""
    G = list(G)
    if not G:
        raise ValueError("no generators")
    n = G[0].n
    if len(G) < n:
        raise ValueError(f"need at least {n} generators, got {len(G)}")
    return [jacobian(PolyMap(F)) for F in combinations(G, n)]


def det_scalar(A: Sequence[Sequence[int]], p: int) -> int:
    """Determinant of an integer matrix mod p by Gaussian elimination."""
    M = [[x % p for x in row] for row in A]
    size = len(M)
    det = 1
    for k in range(size):
        piv = next((i for i in range(k, size) if M[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        det = det * M[k][k] % p
        inv = pow(M[k][k], -1, p)
        for i in range(k + 1, size):
            f = M[i][k] * inv % p
            if f:
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[k])]
    return det % p
