"""Surface syntax for algebra elements.

    expr   := [+|-] term ((+|-) term)*
    term   := [coeff] factor+ | coeff
    factor := ident ['*']
    coeff  := [-]digits['/'digits]

Factors are multiplied left to right by juxtaposition; ``*`` is the postfix
ghost marker on edge names. A bare coefficient stands for that multiple of the
unit (the sum of all vertices), so ``0`` parses to zero.
"""

from __future__ import annotations

import re

from .algebra import Element, LeavittAlgebra
from .errors import ParseError, UnknownIdentifier
from .graph import Graph
from .rings import RingDescriptor

__all__ = ["parse_expr", "format_element"]

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z][A-Za-z0-9_]*)|(\*)|(\+)|(-))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        num, ident, star, plus, minus = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif ident is not None:
            tokens.append(("ident", ident))
        elif star:
            tokens.append(("star", "*"))
        elif plus:
            tokens.append(("plus", "+"))
        else:
            tokens.append(("minus", "-"))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, alg: LeavittAlgebra):
        self.tokens = tokens
        self.i = 0
        self.alg = alg

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Element:
        if self.peek() is None:
            raise ParseError("empty expression")
        total = self.alg.zero()
        negative = False
        if self.peek() in ("plus", "minus"):
            negative = self.take()[0] == "minus"
        total = self.term(negative)
        while self.peek() is not None:
            kind = self.peek()
            if kind not in ("plus", "minus"):
                raise ParseError(f"expected + or -, got {self.tokens[self.i][1]!r}")
            self.take()
            total = total + self.term(kind == "minus")
        return total

    def term(self, negative: bool) -> Element:
        if self.peek() == "minus":
            # coefficient literal carrying its own sign, e.g. "e + -3 f"
            self.take()
            if self.peek() != "num":
                raise ParseError("'-' inside a term must start a coefficient")
            negative = not negative
        coeff = None
        if self.peek() == "num":
            coeff = self.alg.ring.parse_literal(self.take()[1])
        factors = []
        while self.peek() == "ident":
            factors.append(self.factor())
        if coeff is None and not factors:
            got = self.tokens[self.i][1] if self.i < len(self.tokens) else "end of input"
            raise ParseError(f"expected a term, got {got!r}")
        value = self.alg.unit() if not factors else factors[0]
        for f in factors[1:]:
            value = value * f
        if coeff is not None:
            value = value * self.alg.ring(coeff)
        return -value if negative else value

    def factor(self) -> Element:
        name = self.take()[1]
        g = self.alg.graph
        starred = self.peek() == "star"
        if starred:
            self.take()
        if g.has_vertex(name):
            if starred:
                raise ParseError(f"vertex {name!r} takes no ghost marker")
            return self.alg.vertex(name)
        if g.has_edge(name):
            return self.alg.ghost(name) if starred else self.alg.edge(name)
        raise UnknownIdentifier(f"{name!r} is neither a vertex nor an edge")


def parse_expr(text: str, g: Graph | LeavittAlgebra, ring: RingDescriptor | None = None) -> Element:
    """Parse ``text`` into a normalized element of L_ring(g)."""
    alg = g if isinstance(g, LeavittAlgebra) else LeavittAlgebra(g, ring)
    return _Parser(_tokenize(text), alg).expr()


def format_element(x: Element) -> str:
    return str(x)
