"""Parser for polynomial expressions over a given ring.

Accepts integer literals, ring variables, + - * ^ and parentheses.
Whitespace is free.  Errors carry the offending position so callers can
point at the character that broke parsing.
"""

import re

from .poly import Polynomial


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        self.pos = pos
        super().__init__("%s at position %d: %r" % (message, pos, text[max(0, pos - 8):pos + 8]))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError("unexpected character", text, pos)
        num, ident, op = m.groups()
        start = m.start(1) if num else (m.start(2) if ident else m.start(3))
        if num:
            tokens.append(("int", int(num), start))
        elif ident:
            tokens.append(("ident", ident, start))
        else:
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, ring, text):
        self.ring = ring
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.var_index = {name: k for k, name in enumerate(ring.varnames)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.peek()
        if kind == "op" and val == op:
            return self.take()
        raise ParseError("expected %r" % op, self.text, pos)

    def parse(self):
        f = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", self.text, pos)
        return f

    def expr(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            negate = val == "-"
            self.take()
        f = self.term()
        if negate:
            f = -f
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                g = self.term()
                f = f - g if val == "-" else f + g
            else:
                return f

    def term(self):
        f = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.factor()
            else:
                return f

    def factor(self):
        f = self.atom()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "^":
                self.take()
                kind, e, pos = self.take()
                if kind != "int":
                    raise ParseError("exponent must be a literal integer", self.text, pos)
                f = f ** e
            else:
                return f

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.ring.from_terms({(0,) * self.ring.nvars: val})
        if kind == "ident":
            idx = self.var_index.get(val)
            if idx is None:
                raise ParseError("unknown variable %r" % val, self.text, pos)
            return self.ring.var(idx)
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        raise ParseError("expected a term", self.text, pos)


def parse_polynomial(ring, text):
    """Parse text into a Polynomial over ring.

    parse(print(f)) == f for every polynomial f (print uses balanced
    coefficients and explicit operators, all of which parse back).
    """
    if not isinstance(text, str):
        raise ParseError("expected a string", str(text), 0)
    f = _Parser(ring, text).parse()
    assert isinstance(f, Polynomial)
    return f
