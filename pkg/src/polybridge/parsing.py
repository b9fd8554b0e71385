"""Parsers for command-line inputs: rationals, index sets and polynomials in t."""
from __future__ import annotations

import re
from fractions import Fraction

from .exact_core import UniPoly

_RATIONAL = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_EMPTY_SET = {"", "{}", "[]", "none", "empty"}


class ParseError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"not a rational literal: {text!r} (use p/q or an integer)")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_set(text: str) -> list[int]:
    """Accepts ``1,4,5``, ``{1,4,5}``, ``[1 4 5]``; ``{}`` or ``none`` for the empty set."""
    body = text.strip()
    if body.lower() in _EMPTY_SET:
        return []
    if body[:1] in "{[(" and body[-1:] in "}])":
        body = body[1:-1]
    parts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"malformed index set: {text!r}") from None


_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z]\w*)|(\S))")


class _PolyParser:
    """Recursive descent: sum := term (+|- term)*, term := unary ((*|/|juxtaposition) unary)*,
    unary := (+|-) unary | power, power := atom (^ integer)?, atom := int | t | ( sum )."""

    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.tokens = self._lex(text)
        self.pos = 0

    def _lex(self, text):
        out = []
        for m in _TOKEN.finditer(text):
            num, name, sym = m.groups()
            if num is not None:
                out.append(("num", int(num)))
            elif name is not None:
                if name != self.var:
                    raise ParseError(f"unknown symbol {name!r} in {text!r}; the variable is {self.var!r}")
                out.append(("var", name))
            elif sym is not None:
                if sym not in "+-*/^()":
                    raise ParseError(f"unexpected character {sym!r} in {text!r}")
                out.append(("op", sym))
        return out

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> UniPoly:
        if not self.tokens:
            raise ParseError("empty polynomial expression")
        result = self.sum()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return result

    def sum(self) -> UniPoly:
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _starts_factor(self) -> bool:
        kind, val = self.peek()
        return kind in ("num", "var") or (kind == "op" and val == "(")

    def term(self) -> UniPoly:
        acc = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.unary()
            elif kind == "op" and val == "/":
                self.take()
                d = self.unary()
                if not d.is_constant() or d.is_zero():
                    raise ParseError(f"division only by nonzero constants in {self.text!r}")
                acc = acc * UniPoly([1 / d.coeff(0)])
            elif self._starts_factor():
                acc = acc * self.power()
            else:
                return acc

    def unary(self) -> UniPoly:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> UniPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            return base**val
        return base

    def atom(self) -> UniPoly:
        kind, val = self.take()
        if kind == "num":
            return UniPoly([val])
        if kind == "var":
            return UniPoly([0, 1])
        if (kind, val) == ("op", "("):
            inner = self.sum()
            if self.take() != ("op", ")"):
                raise ParseError(f"unbalanced parentheses in {self.text!r}")
            return inner
        raise ParseError(f"unexpected {val!r} in {self.text!r}")


def parse_poly(text: str, var: str = "t") -> UniPoly:
    """Parse an expression such as ``3/4 t^2 - (t - 1)^3`` into a UniPoly."""
    return _PolyParser(text, var).parse()
