"""Text formats for ideals and weighted oriented graphs.

Ideal files::

    ring x1 x2 x3
    ideal Q1 = x1^2, x2^2, x3^4    # comment
    ideal Q2 = x1^3, x2^3, x3^2

Graph files::

    vertices: x1 x2:2 x3
    arcs: x1->x2 x2->x3

Whitespace between tokens is insignificant; ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError
from .graphs import WeightedOrientedGraph
from .ideal import MonomialIdeal, format_monomial

MAX_EXPONENT_DIGITS = 64

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>->|[\^*,=:]))")
_KEYWORDS = {"ring", "ideal"}


def _tokenize(text: str, lineno: int) -> list:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1
            while col <= len(text) and text[col - 1].isspace():
                col += 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", lineno, col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


class _Cursor:
    def __init__(self, tokens, lineno, line_length):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.end_col = line_length + 1

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def col(self):
        tok = self.peek()
        return tok[2] if tok else self.end_col

    def error(self, msg):
        return ParseError(msg, self.lineno, self.col())

    def take(self, kind=None, value=None, what=None):
        tok = self.peek()
        if tok is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            found = "end of line" if tok is None else repr(tok[1])
            raise self.error(f"expected {what or value or kind}, found {found}")
        self.i += 1
        return tok

    def at(self, kind=None, value=None):
        tok = self.peek()
        return tok is not None and (kind is None or tok[0] == kind) and (value is None or tok[1] == value)

    def done(self):
        return self.i >= len(self.tokens)


def _parse_int(cur: _Cursor, what: str) -> int:
    tok = cur.take("int", what=what)
    if len(tok[1]) > MAX_EXPONENT_DIGITS:
        raise ParseError(f"{what} has more than {MAX_EXPONENT_DIGITS} digits",
                         cur.lineno, tok[2])
    return int(tok[1])


# -- ideals -----------------------------------------------------------------------

@dataclass
class IdealSpec:
    """Declared variables plus named generator lists (as written, not minimized)."""

    variables: tuple
    ideals: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.variables)

    def ideal(self, name: str) -> MonomialIdeal:
        try:
            gens = self.ideals[name]
        except KeyError:
            raise ParseError(f"no ideal named {name!r}") from None
        return MonomialIdeal.from_generators(self.n, gens)


def _parse_monomial(cur: _Cursor, index: dict) -> tuple:
    exps = [0] * len(index)
    while True:
        if cur.at("int"):
            tok = cur.peek()
            if tok[1] != "1":
                raise cur.error(f"only the constant 1 may appear as a factor, found {tok[1]!r}")
            cur.take()
        else:
            tok = cur.take("name", what="variable or 1")
            if tok[1] not in index:
                raise ParseError(f"undeclared variable {tok[1]!r}", cur.lineno, tok[2])
            e = 1
            if cur.at("op", "^"):
                cur.take()
                e = _parse_int(cur, "exponent")
            exps[index[tok[1]]] += e
        if not cur.at("op", "*"):
            return tuple(exps)
        cur.take()


def parse_ideal_spec(text: str) -> IdealSpec:
    variables = None
    index = {}
    ideals = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno, len(line.rstrip()))
        head = cur.take("name", what="'ring' or 'ideal'")
        if head[1] == "ring":
            if variables is not None:
                raise ParseError("duplicate ring declaration", lineno, head[2])
            names = []
            while not cur.done():
                tok = cur.take("name", what="variable name")
                if tok[1] in _KEYWORDS:
                    raise ParseError(f"{tok[1]!r} is reserved", lineno, tok[2])
                if tok[1] in index:
                    raise ParseError(f"duplicate variable {tok[1]!r}", lineno, tok[2])
                index[tok[1]] = len(names)
                names.append(tok[1])
            if not names:
                raise cur.error("ring declaration needs at least one variable")
            variables = tuple(names)
        elif head[1] == "ideal":
            if variables is None:
                raise ParseError("ideal declared before the ring line", lineno, head[2])
            name = cur.take("name", what="ideal name")
            if name[1] in ideals:
                raise ParseError(f"duplicate ideal {name[1]!r}", lineno, name[2])
            cur.take("op", "=", what="'='")
            gens = [_parse_monomial(cur, index)]
            while cur.at("op", ","):
                cur.take()
                gens.append(_parse_monomial(cur, index))
            if not cur.done():
                raise cur.error(f"unexpected {cur.peek()[1]!r}")
            ideals[name[1]] = tuple(gens)
        else:
            raise ParseError(f"expected 'ring' or 'ideal', found {head[1]!r}", lineno, head[2])
    if variables is None:
        raise ParseError("missing ring declaration")
    return IdealSpec(variables, ideals)


def format_ideal_spec(spec: IdealSpec) -> str:
    lines = ["ring " + " ".join(spec.variables)]
    for name, gens in spec.ideals.items():
        body = ", ".join(format_monomial(g, spec.variables) for g in gens)
        lines.append(f"ideal {name} = {body}")
    return "\n".join(lines) + "\n"


# -- graphs -----------------------------------------------------------------------

@dataclass
class GraphSpec:
    vertices: tuple
    weights: tuple
    arcs: tuple  # of (source name, target name)

    def to_graph(self) -> WeightedOrientedGraph:
        index = {v: i for i, v in enumerate(self.vertices)}
        return WeightedOrientedGraph.build(
            len(self.vertices), [(index[a], index[b]) for a, b in self.arcs], self.weights)


def parse_graph_spec(text: str) -> GraphSpec:
    vertices, weights, arcs = None, [], []
    pending = []  # arcs seen before the vertices line, checked at the end
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno, len(line.rstrip()))
        head = cur.take("name", what="'vertices' or 'arcs'")
        cur.take("op", ":", what="':'")
        if head[1] == "vertices":
            if vertices is not None:
                raise ParseError("duplicate vertices line", lineno, head[2])
            vertices = []
            while not cur.done():
                tok = cur.take("name", what="vertex name")
                if tok[1] in vertices:
                    raise ParseError(f"duplicate vertex {tok[1]!r}", lineno, tok[2])
                w = 1
                if cur.at("op", ":"):
                    cur.take()
                    wtok = cur.peek()
                    w = _parse_int(cur, "weight")
                    if w < 1:
                        raise ParseError("weights must be >= 1", lineno, wtok[2])
                vertices.append(tok[1])
                weights.append(w)
        elif head[1] == "arcs":
            while not cur.done():
                a = cur.take("name", what="arc source")
                cur.take("op", "->", what="'->'")
                b = cur.take("name", what="arc target")
                if a[1] == b[1]:
                    raise ParseError(f"self-arc {a[1]}->{b[1]}", lineno, a[2])
                if (a[1], b[1]) in arcs:
                    raise ParseError(f"duplicate arc {a[1]}->{b[1]}", lineno, a[2])
                arcs.append((a[1], b[1]))
                pending.append((a, b, lineno))
        else:
            raise ParseError(f"expected 'vertices' or 'arcs', found {head[1]!r}",
                             lineno, head[2])
    if vertices is None:
        raise ParseError("missing vertices line")
    for a, b, lineno in pending:
        for tok in (a, b):
            if tok[1] not in vertices:
                raise ParseError(f"undeclared vertex {tok[1]!r}", lineno, tok[2])
    return GraphSpec(tuple(vertices), tuple(weights), tuple(arcs))


def format_graph_spec(spec: GraphSpec) -> str:
    verts = " ".join(v if w == 1 else f"{v}:{w}" for v, w in zip(spec.vertices, spec.weights))
    arcs = " ".join(f"{a}->{b}" for a, b in spec.arcs)
    return f"vertices: {verts}\narcs: {arcs}\n".replace("arcs: \n", "arcs:\n")
