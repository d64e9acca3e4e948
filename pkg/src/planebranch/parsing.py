"""Text format for polynomials in x and y.

Grammar, with whitespace free between tokens but never inside a number:

    expr     := '-'? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := '(' expr ')' | 'x' | 'y' | rational
    rational := uint ('/' uint)?

Multiplication is always explicit: ``2x`` is rejected, ``2*x`` is fine.
``parse_poly`` and ``str(BiPoly)`` round-trip exactly.
"""

from fractions import Fraction

from .errors import PolyParseError
from .poly import BiPoly

__all__ = ["parse_poly"]


class _Token:
    __slots__ = ("kind", "value", "line", "column")

    def __init__(self, kind, value, line, column):
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column

    def __repr__(self):
        return f"_Token({self.kind!r}, {self.value!r})"


_SINGLE = {"+", "-", "*", "^", "(", ")", "x", "y"}


def _tokenize(text: str):
    tokens = []
    line, column = 1, 1
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch == "\n":
            pos += 1
            line += 1
            column = 1
            continue
        if ch in " \t\r":
            pos += 1
            column += 1
            continue
        if ch in _SINGLE:
            tokens.append(_Token(ch, ch, line, column))
            pos += 1
            column += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            # a slash binds into the number only when digits follow directly
            if pos + 1 < n and text[pos] == "/" and text[pos + 1].isdigit():
                pos += 1
                while pos < n and text[pos].isdigit():
                    pos += 1
                num, den = text[start:pos].split("/")
                if int(den) == 0:
                    raise PolyParseError("zero denominator", line, column)
                value = Fraction(int(num), int(den))
            else:
                value = Fraction(text[start:pos])
            tokens.append(_Token("number", value, line, column))
            column += pos - start
            continue
        raise PolyParseError(f"unexpected character {ch!r}", line, column)
    tokens.append(_Token("end", None, line, column))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolyParseError(message, tok.line, tok.column)

    def expect(self, kind) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(f"expected {kind!r}, found {tok.kind!r}")
        return self.advance()

    def expr(self) -> BiPoly:
        negate = False
        if self.peek().kind == "-":
            self.advance()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            result = result + rhs if op.kind == "+" else result - rhs
        return result

    def term(self) -> BiPoly:
        result = self.factor()
        while self.peek().kind == "*":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> BiPoly:
        base = self.base()
        if self.peek().kind != "^":
            return base
        self.advance()
        tok = self.peek()
        if tok.kind != "number" or tok.value.denominator != 1 or tok.value < 0:
            self.fail("exponent must be a nonnegative integer", tok)
        self.advance()
        return base ** int(tok.value)

    def base(self) -> BiPoly:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "x":
            self.advance()
            return BiPoly.x()
        if tok.kind == "y":
            self.advance()
            return BiPoly.y()
        if tok.kind == "number":
            self.advance()
            return BiPoly.constant(tok.value)
        if tok.kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {tok.kind!r}", tok)


def parse_poly(text: str) -> BiPoly:
    """Parse the textual polynomial format into a BiPoly.

    Raises PolyParseError, carrying 1-based line and column, on any
    malformed input, including trailing junk after a valid prefix.
    """
    parser = _Parser(_tokenize(text))
    if parser.peek().kind == "end":
        parser.fail("empty input")
    result = parser.expr()
    if parser.peek().kind != "end":
        parser.fail(f"unexpected {parser.peek().kind!r} after expression")
    return result
