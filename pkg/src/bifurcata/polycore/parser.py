"""Recursive-descent parser for bivariate polynomial expressions.

Grammar (no implicit multiplication):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' INT)?
    atom   := LITERAL | 'x' | 'y' | '(' expr ')'
    LITERAL := digits ('/' digits)?     # integer or rational, one token

Exponents must be nonnegative integer literals.  All errors carry the byte
offset of the offending token.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional

from gmpy2 import mpq

from ..errors import PolynomialSyntaxError
from .poly import QQ, BiPoly


class _Token(NamedTuple):
    kind: str  # LIT INT-only?, VAR, OP, LP, RP, END
    text: str
    pos: int
    value: Optional[mpq] = None
    is_integer: bool = False


_OPS = set("+-*^")


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            num = text[start:i]
            if i < n and text[i] == "/":
                j = i + 1
                if j < n and text[j].isdigit():
                    i = j
                    while i < n and text[i].isdigit():
                        i += 1
                    den = text[j:i]
                    if mpq(den) == 0:
                        raise PolynomialSyntaxError("zero denominator in rational literal", start)
                    tokens.append(_Token("LIT", text[start:i], start, mpq(num) / mpq(den), False))
                    continue
                raise PolynomialSyntaxError("expected digits after '/' in rational literal", j)
            tokens.append(_Token("LIT", num, start, mpq(num), True))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            name = text[start:i]
            if name in ("x", "y"):
                tokens.append(_Token("VAR", name, start))
                continue
            raise PolynomialSyntaxError(f"unknown identifier '{name}'", start)
        if ch in _OPS:
            tokens.append(_Token("OP", ch, i))
            i += 1
            continue
        if ch == "(":
            tokens.append(_Token("LP", ch, i))
            i += 1
            continue
        if ch == ")":
            tokens.append(_Token("RP", ch, i))
            i += 1
            continue
        raise PolynomialSyntaxError(f"unexpected character '{ch}'", i)
    tokens.append(_Token("END", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token]):
        self.tokens = tokens
        self.idx = 0

    def peek(self) -> _Token:
        return self.tokens[self.idx]

    def advance(self) -> _Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == op:
            self.advance()
            return
        raise PolynomialSyntaxError(f"expected '{op}'", tok.pos)

    def parse_expr(self) -> BiPoly:
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in "+-":
                self.advance()
                rhs = self.parse_term()
                node = node + rhs if tok.text == "+" else node - rhs
            else:
                return node

    def parse_term(self) -> BiPoly:
        node = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "*":
                self.advance()
                node = node * self.parse_factor()
            else:
                return node

    def parse_factor(self) -> BiPoly:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.advance()
            return -self.parse_factor()
        node = self.parse_atom()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.advance()
            exp = self.peek()
            if exp.kind != "LIT" or not exp.is_integer:
                raise PolynomialSyntaxError("exponent must be a nonnegative integer literal", exp.pos)
            self.advance()
            node = node ** int(exp.value)
        return node

    def parse_atom(self) -> BiPoly:
        tok = self.advance()
        if tok.kind == "LIT":
            return BiPoly.constant(tok.value, ("x", "y"), QQ)
        if tok.kind == "VAR":
            return BiPoly.variable(tok.text, ("x", "y"), QQ)
        if tok.kind == "LP":
            inner = self.parse_expr()
            closing = self.peek()
            if closing.kind != "RP":
                raise PolynomialSyntaxError("expected ')'", closing.pos)
            self.advance()
            return inner
        if tok.kind == "END":
            raise PolynomialSyntaxError("unexpected end of input", tok.pos)
        raise PolynomialSyntaxError(f"unexpected '{tok.text}'", tok.pos)


def parse_polynomial(text: str) -> BiPoly:
    """Parse an expression into an expanded canonical polynomial in x, y."""
    parser = _Parser(_tokenize(text))
    poly = parser.parse_expr()
    trailing = parser.peek()
    if trailing.kind != "END":
        raise PolynomialSyntaxError(f"unexpected '{trailing.text}'", trailing.pos)
    return poly
