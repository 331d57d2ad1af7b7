"""Tiny recursive-descent parser for arithmetic expressions.

The grammar is shared by scalars (names are field indeterminates) and by
enveloping-algebra elements (names are basis labels or indeterminates)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Values are combined with the ordinary Python operators, so any type that
implements them (with ``**`` for ``^``) can be produced.
"""

from __future__ import annotations

import re
from typing import Any, Callable, Mapping

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern always matches
            raise ParseError(f"cannot tokenize {text[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif name is not None:
            tokens.append(("name", name))
        elif op in "+-*/^()":
            tokens.append(("op", op))
        else:
            raise ParseError(f"unexpected character {op!r} in {text!r}")
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, names: Mapping[str, Any], number: Callable[[int], Any]):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.names = names
        self.number = number

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            want = value or "a token"
            raise ParseError(f"expected {want} at token {self.pos} of {self.text!r}")
        self.pos += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input at token {self.pos} of {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except TypeError as exc:
                    raise ParseError(f"unsupported division in {self.text!r}: {exc}") from None
        return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, digits = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be an integer literal in {self.text!r}")
            try:
                return base ** (sign * int(digits))
            except (TypeError, ValueError) as exc:
                raise ParseError(f"bad exponent in {self.text!r}: {exc}") from None
        return base

    def atom(self):
        kind, value = self.take()
        if kind == "int":
            return self.number(int(value))
        if kind == "name":
            try:
                return self.names[value]
            except KeyError:
                raise ParseError(f"unknown name {value!r} in {self.text!r}") from None
        if value == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {value!r} in {self.text!r}")


def parse_expression(text: str, names: Mapping[str, Any], number: Callable[[int], Any]):
    """Evaluate ``text`` with ``names`` bound to values and ints lifted by ``number``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    return _Parser(text, names, number).parse()
