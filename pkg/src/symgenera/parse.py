"""Parser for polynomial expressions such as ``1 - 2*y*x^-1``.

Grammar (whitespace-insensitive)::

    expression ::= ['+'|'-'] term (('+'|'-') term)*
    term       ::= factor ('*' factor)*
    factor     ::= rational | variable ['^' signed-int] | '(' expression ')' ['^' int]
    rational   ::= digits ['/' digits]

Variables must belong to the given variable set.  Printing a polynomial with
``str`` and parsing it back is the identity.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .laurent import LaurentPoly, VariableSet

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: VariableSet):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}, found {value or 'end of input'!r}", pos)

    def expression(self) -> LaurentPoly:
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        result = self.term() * sign
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                t = self.term()
                result = result + t if value == "+" else result - t
            else:
                return result

    def term(self) -> LaurentPoly:
        result = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                result = result * self.factor()
            else:
                return result

    def signed_int(self) -> int:
        kind, value, pos = self.take()
        sign = 1
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            kind, value, pos = self.take()
        if kind != "num" or "/" in value:
            raise ParseError(f"malformed exponent {value or 'end of input'!r}", pos)
        return sign * int(value)

    def factor(self) -> LaurentPoly:
        kind, value, pos = self.take()
        if kind == "num":
            num, _, den = value.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", pos)
            return LaurentPoly.constant(self.variables, Fraction(int(num), int(den) if den else 1))
        if kind == "name":
            if value not in self.variables:
                raise ParseError(f"unknown variable {value!r} (allowed: {self.variables})", pos)
            base = LaurentPoly.variable(self.variables, value)
            if self._at("^"):
                self.take()
                return base ** self.signed_int()
            return base
        if kind == "op" and value == "(":
            inner = self.expression()
            self.expect_op(")")
            if self._at("^"):
                self.take()
                _, _, epos = self.peek()
                n = self.signed_int()
                if n < 0 and not inner.is_unit():
                    raise ParseError("negative power of a non-monomial", epos)
                return inner**n
            return inner
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)

    def _at(self, op) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value == op


def parse_poly(text: str, variables: VariableSet | str = "yxz") -> LaurentPoly:
    """Parse ``text`` into a canonical :class:`LaurentPoly` over ``variables``."""
    variables = VariableSet.parse(variables)
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    parser = _Parser(text, variables)
    if parser.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    result = parser.expression()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input {value!r}", pos)
    return result
