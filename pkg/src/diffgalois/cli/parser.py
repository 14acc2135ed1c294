"""Recursive-descent parser for rational expressions in x (and q).

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := base ('^' '-'? integer)?
    base   := 'x' | 'q' | integer | '(' expr ')'

Whitespace is ignored.  'q' is accepted only when the constant field
carries a symbolic q; under a numeric q it stands for that number.
"""

from ..ratcore import RatFun
from ..ratcore.fields import NUMERIC_Q, SYMBOLIC_Q


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.pos = 0
        self.field = field
        self.domain = field.domain

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def parse(self):
        value = self.expr()
        if self.peek():
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-") and self.peek():
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/") and self.peek():
            op = self.peek()
            self.pos += 1
            at = self.pos
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ParseError("division by zero", at)
                value = value / rhs
        return value

    def unary(self):
        if self.peek() == "-":
            self.pos += 1
            return -self.unary()
        return self.factor()

    def factor(self):
        value = self.base()
        if self.peek() == "^":
            self.pos += 1
            negative = False
            if self.peek() == "-":
                negative = True
                self.pos += 1
            at = self.pos
            n = self.integer()
            if negative:
                if not value:
                    raise ParseError("division by zero", at)
                n = -n
            value = value ** n
        return value

    def integer(self):
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def base(self):
        ch = self.peek()
        if ch == "x":
            self.pos += 1
            return RatFun.x(self.domain)
        if ch == "q":
            if self.field.kind == SYMBOLIC_Q:
                self.pos += 1
                return RatFun.constant(self.domain.q, self.domain)
            if self.field.kind == NUMERIC_Q:
                self.pos += 1
                return RatFun.constant(self.field.q_value, self.domain)
            raise ParseError("'q' is not available under the shift operator", self.pos)
        if ch.isdigit():
            return RatFun.constant(self.integer(), self.domain)
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.take(")")
            return value
        if not ch:
            raise ParseError("unexpected end of input", self.pos)
        raise ParseError(f"unexpected {ch!r}", self.pos)


def parse_expression(text, field):
    """Parse ``text`` into a RatFun over ``field`` (a ConstField or operator)."""
    field = getattr(field, "field", field)
    return _Parser(text, field).parse()


def render(f):
    """Canonical string form that parse_expression reads back."""
    return f.to_str("x")
