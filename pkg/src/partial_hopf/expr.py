"""Parser for exact coefficient expressions.

Understands integer literals, a reserved root-of-unity symbol (``z`` in the
JSON interchange format), parameter names, ``+ - * / ^`` and parentheses.
Everything is evaluated in ParamPoly arithmetic, so parsing is exact; the
strings produced by ``CycNumber.render`` and ``ParamPoly.render`` parse back
to equal values.

Division is restricted to constant (parameter-free) divisors, which is all
the interchange format needs.
"""
from __future__ import annotations

import re

from .exact_arith import CycNumber, ParamPoly, cyc_invert, zeta_pow

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[-+*/^()])")


class ExprError(ValueError):
    """Malformed or unsupported coefficient expression."""


def _tokenize(s: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ExprError("bad character %r in %r" % (s[pos], s))
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, order, root_symbol, params):
        self.tokens = tokens
        self.pos = 0
        self.order = order
        self.root = root_symbol
        self.params = params

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok):
        got = self.take()
        if got != tok:
            raise ExprError("expected %r, got %r" % (tok, got))

    def parse_expr(self) -> ParamPoly:
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> ParamPoly:
        value = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.parse_factor()
            if op == "*":
                value = value * rhs
            else:
                den = rhs.constant_value()
                if den.is_zero():
                    raise ExprError("division by zero")
                value = value * cyc_invert(den)
        return value

    def parse_factor(self) -> ParamPoly:
        tok = self.peek()
        if tok in ("-", "+"):
            self.take()
            inner = self.parse_factor()
            return -inner if tok == "-" else inner
        base = self.parse_atom()
        if self.peek() in ("^", "**"):
            self.take()
            exp = self.parse_int_exponent()
            if exp >= 0:
                return base ** exp
            inv = cyc_invert(base.constant_value())
            return ParamPoly.const(self.order, inv ** (-exp))
        return base

    def parse_int_exponent(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.take()
        if tok is None or not tok.isdigit():
            raise ExprError("expected integer exponent, got %r" % (tok,))
        return sign * int(tok)

    def parse_atom(self) -> ParamPoly:
        tok = self.take()
        if tok is None:
            raise ExprError("unexpected end of expression")
        if tok == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if tok.isdigit():
            return ParamPoly.const(self.order, int(tok))
        if tok == self.root:
            return ParamPoly.const(self.order, zeta_pow(self.order, 1))
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok):
            if self.params is not None and tok not in self.params:
                raise ExprError("unknown parameter %r" % tok)
            return ParamPoly.var(self.order, tok)
        raise ExprError("unexpected token %r" % tok)


def parse_poly(s: str, order: int, root_symbol: str = "z",
               params=None) -> ParamPoly:
    """Parse an expression into a ParamPoly over Q(zeta_order).

    ``root_symbol`` is read as the primitive order-th root of unity; other
    names become parameters (restricted to ``params`` when given).
    """
    parser = _Parser(_tokenize(s), order, root_symbol, params)
    value = parser.parse_expr()
    if parser.peek() is not None:
        raise ExprError("trailing tokens in %r" % s)
    return value


def parse_scalar(s: str, order: int, root_symbol: str = "z") -> CycNumber:
    """Parse a parameter-free expression into a CycNumber."""
    return parse_poly(s, order, root_symbol, params=()).constant_value()
