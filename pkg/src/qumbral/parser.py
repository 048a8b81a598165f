"""Recursive-descent parser and printer for polynomial expressions in ``x``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INTEGER)?
    atom   := NUMBER | 'x' | '(' expr ')'

Division is only allowed by nonzero constants, so every expression
normalizes to a canonical :class:`Poly`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import Poly, rational, rational_to_str
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|(x)|([-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "x", "op", "end"
    text: str
    offset: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None:
            rest = src[pos:]
            if not rest.strip():
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(_byte_offset(src, bad), f"unexpected character {src[bad]!r}")
        num, var, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(Token("num", num, start))
        elif var is not None:
            tokens.append(Token("x", var, start))
        else:
            tokens.append(Token("op", op, start))
        pos = m.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


def _byte_offset(src: str, index: int) -> int:
    return len(src[:index].encode("utf-8"))


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, tok: Token, msg: str) -> ParseError:
        return ParseError(_byte_offset(self.src, tok.offset), msg)

    def accept(self, *ops: str) -> Token | None:
        tok = self.peek()
        if tok.kind == "op" and tok.text in ops:
            return self.take()
        return None

    def parse(self) -> Poly:
        if self.peek().kind == "end":
            raise self.error(self.peek(), "empty expression")
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise self.error(tok, f"unexpected {tok.text!r}")
        return p

    def expr(self) -> Poly:
        acc = self.term()
        while (op := self.accept("+", "-")) is not None:
            rhs = self.term()
            acc = acc + rhs if op.text == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.unary()
        while (op := self.accept("*", "/")) is not None:
            rhs_tok = self.peek()
            rhs = self.unary()
            if op.text == "*":
                acc = acc * rhs
            else:
                if rhs.degree > 0:
                    raise self.error(rhs_tok, "division by a non-constant")
                if rhs.is_zero():
                    raise self.error(rhs_tok, "division by zero")
                acc = acc.scale(1 / rhs[0])
        return acc

    def unary(self) -> Poly:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.accept("^"):
            tok = self.peek()
            if tok.kind != "num" or not tok.text.isdigit():
                raise self.error(tok, "exponent must be a nonnegative integer literal")
            self.take()
            return base ** int(tok.text)
        return base

    def atom(self) -> Poly:
        tok = self.take()
        if tok.kind == "num":
            return Poly.constant(rational(tok.text))
        if tok.kind == "x":
            return Poly.monomial(1)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            if not self.accept(")"):
                raise self.error(self.peek(), "expected ')'")
            return inner
        if tok.kind == "end":
            raise self.error(tok, "unexpected end of input")
        raise self.error(tok, f"unexpected {tok.text!r}")


def parse_poly(src: str) -> Poly:
    return _Parser(src).parse()


def render(p: Poly) -> str:
    """Human-readable form, highest degree first: ``x^3 - 3*x + 2``."""
    pieces = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a, b = abs(c.numerator), c.denominator
        if k == 0:
            body = rational_to_str(abs(c))
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
            if b != 1:
                body += f"/{b}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
