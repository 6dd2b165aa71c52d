"""Text form of polynomials.

Grammar (whitespace is insignificant)::

    poly   := term ('+' term)*  |  '0'
    term   := '1' | factor (['*'] factor)*
    factor := 'x' INT            (1 <= INT <= n)
"""
from __future__ import annotations

import re

from .errors import DomainError
from .gf2poly import Gf2Poly, make_poly

_TOKEN = re.compile(r"\s*(?:(?P<var>[xX]\s*\d+)|(?P<num>\d+)|(?P<op>[+*])|(?P<bad>\S))")


class PolyParseError(DomainError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        if kind == "bad":
            raise PolyParseError(f"unexpected character {m.group('bad')!r}", text, start)
        yield kind, m.group(kind), start
        pos = m.end()


def parse_poly(text: str, n_vars: int) -> Gf2Poly:
    """Parse ``text``; repeated terms cancel mod 2."""
    toks = list(_tokens(text))
    toks.append(("end", "", len(text)))
    monomials = []
    i = 0

    def expect_term(i):
        kind, value, pos = toks[i]
        if kind == "num":
            if value not in ("0", "1"):
                raise PolyParseError(f"constant {value} is not 0 or 1", text, pos)
            return (0 if value == "1" else None), i + 1
        if kind != "var":
            raise PolyParseError("expected a term", text, pos)
        mask = 0
        while True:
            kind, value, pos = toks[i]
            if kind != "var":
                raise PolyParseError("expected a variable", text, pos)
            idx = int(value[1:].strip())
            if not 1 <= idx <= n_vars:
                raise PolyParseError(f"variable x{idx} out of range 1..{n_vars}", text, pos)
            mask |= 1 << (idx - 1)
            i += 1
            kind = toks[i][0]
            if kind == "op" and toks[i][1] == "*":
                i += 1
            elif kind != "var":
                return mask, i

    while True:
        mono, i = expect_term(i)
        if mono is not None:
            monomials.append(mono)
        kind, value, pos = toks[i]
        if kind == "end":
            break
        if kind == "op" and value == "+":
            i += 1
            continue
        raise PolyParseError("expected '+' or end of input", text, pos)
    return make_poly(n_vars, monomials)


def format_monomial(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"x{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


def format_poly(p: Gf2Poly) -> str:
    """Canonical text: terms by ascending mask, variables ascending."""
    if p.is_zero():
        return "0"
    return " + ".join(format_monomial(m) for m in p.monomials)
