"""
A small expression language for constructible functions.

    expr   := ['-'] term (('+' | '-') term)*
    term   := coeff? atom | '0'
    coeff  := integer | integer '/' positive-integer
    atom   := 'orb' set | 'sub' set | 'P' integer
            | 'U(' n ',' k ')' | 'L(' n ',' k ')' | '(' expr ')'
    set    := '{' integer (',' integer)* '}'

``orb S`` is the indicator of the torus orbit O_S, ``sub S`` that of the
coordinate subspace P_S, ``P n`` that of P^n = P_{0..n}.  ``U(n,k)`` and
``L(n,k)`` are the loci in P^n with exactly / at least n-k vanishing
coordinates; when n is smaller than the ambient they sit inside the first
n+1 coordinates.  A lone ``0`` is the zero function.

:func:`serialize` writes any function as a sum of ``orb`` terms in
canonical order, which :func:`parse` reads back exactly.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .constructible import (
    ConstructibleFunction,
    indicator_L,
    indicator_orbit,
    indicator_subspace,
    indicator_U,
)
from .strata import AmbientSpace, StratumSet
from .varmaps import CoordinateInclusion, pushforward_cf


class ParseError(ValueError):
    def __init__(self, message, text, pos, token=None):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.token = token
        where = f"line {self.line}, column {self.column}"
        if token is not None:
            where += f" at {token!r}"
        super().__init__(f"{message} ({where})")


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z]+)|(?P<punct>[{}(),+\-/]))")


@dataclass(frozen=True)
class Token:
    kind: str  # 'num', 'ident', 'punct', 'end'
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos, text[pos])
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# AST nodes are tuples: (kind, payload, pos)
#   ('orb' | 'sub', tuple of indices, pos)
#   ('P', n, pos)
#   ('U' | 'L', (n, k), pos)
#   ('sum', [(Fraction, node)], pos)
#   ('zero', None, pos)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.tok
        raise ParseError(message, self.text, tok.pos, tok.text or "end of input")

    def take(self, kind, text=None):
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            self.error(f"expected {text or kind}")
        self.i += 1
        return tok

    def at(self, kind, text=None):
        return self.tok.kind == kind and (text is None or self.tok.text == text)

    def expr(self):
        start = self.tok.pos
        terms = []
        sign = 1
        if self.at("punct", "-"):
            self.i += 1
            sign = -1
        terms.append(self.term(sign))
        while self.at("punct", "+") or self.at("punct", "-"):
            sign = 1 if self.take("punct").text == "+" else -1
            terms.append(self.term(sign))
        return ("sum", terms, start)

    def term(self, sign):
        coeff = Fraction(sign)
        if self.at("num"):
            num = self.take("num")
            value = Fraction(int(num.text))
            if self.at("punct", "/"):
                self.i += 1
                den = self.take("num")
                if int(den.text) == 0:
                    self.error("zero denominator", den)
                value /= int(den.text)
            if value == 0 and self._at_term_end():
                return (Fraction(0), ("zero", None, num.pos))
            coeff *= value
        return (coeff, self.atom())

    def _at_term_end(self):
        return self.at("end") or self.at("punct", "+") or self.at("punct", "-") or self.at("punct", ")")

    def integer(self):
        return int(self.take("num").text)

    def atom(self):
        tok = self.tok
        if self.at("punct", "("):
            self.i += 1
            node = self.expr()
            self.take("punct", ")")
            return node
        if tok.kind != "ident":
            self.error("expected orb, sub, P, U, L or '('")
        self.i += 1
        name = tok.text
        if name in ("orb", "sub"):
            return (name, self.set_literal(), tok.pos)
        if name == "P":
            return ("P", self.integer(), tok.pos)
        if name in ("U", "L"):
            self.take("punct", "(")
            n = self.integer()
            self.take("punct", ",")
            k = self.integer()
            self.take("punct", ")")
            return (name, (n, k), tok.pos)
        self.error("unknown atom", tok)

    def set_literal(self):
        self.take("punct", "{")
        if self.at("punct", "}"):
            self.error("empty set literal")
        members = [self.integer()]
        while self.at("punct", ","):
            self.i += 1
            members.append(self.integer())
        self.take("punct", "}")
        return tuple(members)

    def parse(self):
        node = self.expr()
        if not self.at("end"):
            self.error("unexpected token")
        return node


def parse_ast(text: str):
    return _Parser(text).parse()


def _max_index(node) -> int:
    kind, payload, _ = node
    if kind == "sum":
        return max((_max_index(n) for _, n in payload), default=0)
    if kind in ("orb", "sub"):
        return max(payload)
    if kind == "P":
        return payload
    if kind in ("U", "L"):
        return payload[0]
    return 0


def infer_ambient(text: str) -> int:
    """Smallest ambient dimension containing every index the expression mentions."""
    return _max_index(parse_ast(text))


def _build(node, ambient: AmbientSpace, text: str) -> ConstructibleFunction:
    kind, payload, pos = node
    if kind == "sum":
        f = ConstructibleFunction.zero(ambient)
        for coeff, sub in payload:
            g = _build(sub, ambient, text)
            f = f + g.scale(coeff)
        return f
    if kind == "zero":
        return ConstructibleFunction.zero(ambient)
    if kind in ("orb", "sub"):
        if len(set(payload)) != len(payload):
            raise ParseError("repeated index in set", text, pos)
        bad = [i for i in payload if i > ambient.n]
        if bad:
            raise ParseError(f"index {bad[0]} outside the ambient P^{ambient.n}", text, pos)
        S = StratumSet.of(ambient, payload)
        return indicator_orbit(S) if kind == "orb" else indicator_subspace(S)
    if kind == "P":
        if payload > ambient.n:
            raise ParseError(f"P {payload} does not fit in the ambient P^{ambient.n}", text, pos)
        return indicator_subspace(StratumSet.of(ambient, range(payload + 1)))
    if kind in ("U", "L"):
        n, k = payload
        if n > ambient.n:
            raise ParseError(f"{kind}({n},{k}) does not fit in the ambient P^{ambient.n}", text, pos)
        if k > n:
            raise ParseError(f"{kind}({n},{k}) needs k <= n", text, pos)
        local = (indicator_U if kind == "U" else indicator_L)(n, k)
        return pushforward_cf(CoordinateInclusion.standard(n, ambient.n), local)
    raise AssertionError(kind)


def parse(text: str, ambient: int | AmbientSpace | None = None) -> ConstructibleFunction:
    """Parse ``text`` into a function on P^ambient (inferred when omitted)."""
    node = parse_ast(text)
    if ambient is None:
        ambient = _max_index(node)
    if isinstance(ambient, int):
        ambient = AmbientSpace(ambient)
    return _build(node, ambient, text)


def format_rational(c: Fraction) -> str:
    return str(c)


def serialize(f: ConstructibleFunction) -> str:
    parts = []
    for S, c in f.items():
        mag = abs(c)
        body = f"orb{S}" if mag == 1 else f"{mag} orb{S}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"
