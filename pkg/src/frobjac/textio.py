"""Text form of polynomials: a recursive-descent parser and the canonical printer.

Grammar (no implicit multiplication, no unary minus)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := nat | variable | '(' expr ')'

Variables are ``x1`` .. ``xn``; ``x``, ``y``, ``z`` are accepted as aliases
for ``x1``, ``x2``, ``x3`` when n <= 3.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable

from frobjac.multiindex import glex_key
from frobjac.polynomial import PolyMap, Polynomial

#: Largest total degree a parsed polynomial may reach.
MAX_EXPONENT = 4096

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")
_ALIASES = {"x": 0, "y": 1, "z": 2}


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    def __init__(self, text: str, p: int, n: int):
        self.text, self.p, self.n = text, p, n
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                bad = len(text) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        f = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return f

    def expr(self) -> Polynomial:
        f = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            _, op, _ = self.take()
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            f = f * self.factor()
        return f

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "nat":
                raise ParseError("exponent must be a natural number", pos)
            k = int(val)
            if k > MAX_EXPONENT or (base.degree() > 0 and base.degree() * k > MAX_EXPONENT):
                raise ParseError(f"exponent overflow (degree cap {MAX_EXPONENT})", pos)
            return base**k
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "nat":
            return Polynomial.constant(int(val), self.p, self.n)
        if kind == "var":
            return Polynomial.variable(self._var_index(val, pos), self.p, self.n)
        if (kind, val) == ("op", "("):
            f = self.expr()
            self.expect_op(")")
            return f
        raise ParseError(f"expected a number, variable or '(', found {val or 'end of input'!r}", pos)

    def _var_index(self, name: str, pos: int) -> int:
        m = re.fullmatch(r"x([1-9]\d*)", name)
        if m and int(m.group(1)) <= self.n:
            return int(m.group(1)) - 1
        if name in _ALIASES and self.n <= 3 and _ALIASES[name] < self.n:
            return _ALIASES[name]
        raise ParseError(f"unknown variable {name!r} for n={self.n}", pos)


def parse_polynomial(text: str, p: int, n: int) -> Polynomial:
    return _Parser(text, p, n).parse()


def parse_map(text: str, p: int, n: int) -> PolyMap:
    """Components separated by ';' (or newlines); their count must be n."""
    parts = [s for s in re.split(r"[;\n]", text) if s.strip()]
    if len(parts) != n:
        raise ValueError(f"expected {n} map components, got {len(parts)}")
    return PolyMap(parse_polynomial(s, p, n) for s in parts)


def read_polynomial_lines(path: str | Path) -> list[str]:
    """Non-empty lines of a UTF-8 file with '#' comments removed."""
    lines = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _monomial_text(e: Iterable[int]) -> str:
    parts = []
    for i, k in enumerate(e, start=1):
        if k == 1:
            parts.append(f"x{i}")
        elif k:
            parts.append(f"x{i}^{k}")
    return "*".join(parts)


def print_canonical(f: Polynomial) -> str:
    """Terms in descending graded-lex order, e.g. ``2*x1^2*x2 + x2 + 1``."""
    if f.is_zero():
        return "0"
    out = []
    for e in sorted(f.terms, key=glex_key, reverse=True):
        c, mono = f.terms[e], _monomial_text(e)
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return " + ".join(out)
