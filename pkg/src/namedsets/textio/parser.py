"""Reader for the ``.triad`` workspace format.

A file is a sequence of blocks ``kind Id { key: items; ... }`` with ``#``
line comments. Loading is all-or-nothing: any error yields no workspace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import NamedSetError
from ..kernel import Morphism, NamedSet
from ..lattice import FiniteLattice
from ..properties import Property
from ..structures import Calculus, GroundRule, Grammar, MealyAutomaton, Production, TMRule, TuringMachine
from ..views import REALLINE, SYMMETRIC, UNIT, FuzzySet, Multiset, PlainSet, Scale
from .workspace import (
    KINDS,
    Diagnostic,
    InvariantViolation,
    UnknownReference,
    Workspace,
    WorkspaceSyntaxError,
)

BARE_CHARS = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_.+-")
PUNCT = ("->", "=>", "<=", "{", "}", ":", ";", "(", ")", ",", "/")
ESCAPES = {'"': '"', "\\": "\\"}

SCALE_NAMES = {"unit": UNIT, "sym": SYMMETRIC, "symmetric": SYMMETRIC, "real": REALLINE, "realline": REALLINE}


@dataclass(frozen=True)
class Token:
    kind: str  # "atom", "end", or the punctuation itself
    text: str
    line: int
    col: int


def _error(cls, line, col, message):
    return cls(Diagnostic("error", line, col, message))


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if c.isspace():
            i, col = i + 1, col + 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c == '"':
            start_col, j, buf = col, i + 1, []
            while True:
                if j >= n or text[j] == "\n":
                    raise _error(WorkspaceSyntaxError, line, start_col, "unterminated string")
                if text[j] == "\\":
                    esc = text[j + 1] if j + 1 < n else ""
                    if esc not in ESCAPES:
                        raise _error(WorkspaceSyntaxError, line, col + (j - i), f"bad escape \\{esc}")
                    buf.append(ESCAPES[esc])
                    j += 2
                    continue
                if text[j] == '"':
                    break
                buf.append(text[j])
                j += 1
            if not buf:
                raise _error(WorkspaceSyntaxError, line, start_col, "empty quoted atom")
            tokens.append(Token("atom", "".join(buf), line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        for p in PUNCT:
            if text.startswith(p, i):
                tokens.append(Token(p, p, line, col))
                i, col = i + len(p), col + len(p)
                break
        else:
            if c not in BARE_CHARS:
                raise _error(WorkspaceSyntaxError, line, col, f"unexpected character {c!r}")
            j = i
            while j < n and text[j] in BARE_CHARS and not text.startswith("->", j):
                j += 1
            tokens.append(Token("atom", text[i:j], line, col))
            col += j - i
            i = j
    tokens.append(Token("end", "", line, col))
    return tokens


@dataclass
class Entry:
    key: Token
    items: list


@dataclass
class Block:
    kind: str
    id: Token
    entries: list[Entry] = field(default_factory=list)

    def get(self, key):
        return [e for e in self.entries if e.key.text == key]


class _Reader:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def at(self, *kinds) -> bool:
        return self.tok.kind in kinds

    def expect(self, kind, what=None) -> Token:
        if self.tok.kind != kind:
            found = "end of file" if self.tok.kind == "end" else repr(self.tok.text)
            raise _error(WorkspaceSyntaxError, self.tok.line, self.tok.col,
                         f"expected {what or repr(kind)}, found {found}")
        return self.next()

    def atom(self, what="atom") -> Token:
        return self.expect("atom", what)


# item readers: each consumes one item and returns a located tuple

def _atom_item(r):
    t = r.atom()
    return (t, t.text)


def _arrow_item(r):
    a = r.atom()
    r.expect("->")
    b = r.atom()
    return (a, (a.text, b.text))


def _order_item(r):
    a = r.atom()
    r.expect("<=")
    b = r.atom()
    return (a, (a.text, b.text))


def _count_item(r):
    a = r.atom()
    r.expect(":")
    k = r.atom("multiplicity")
    if not k.text.isdigit():
        raise _error(WorkspaceSyntaxError, k.line, k.col, f"multiplicity must be a decimal natural, got {k.text!r}")
    return (a, (a.text, int(k.text)))


def _degree_item(r):
    a = r.atom()
    r.expect(":")
    d = r.atom("degree")
    text = d.text
    if r.at("/"):
        r.next()
        text += "/" + r.atom("denominator").text
    return (a, (a.text, text, d))


def _delta_item(r):
    start = r.expect("(")
    s = r.atom().text
    r.expect(",")
    q = r.atom().text
    r.expect(")")
    r.expect("->")
    r.expect("(")
    q2 = r.atom().text
    r.expect(",")
    o = r.atom().text
    r.expect(")")
    return (start, ((s, q), (q2, o)))


def _calculus_rule(r):
    first = r.tok
    premises = []
    while r.at("atom"):
        premises.append(r.next().text)
    r.expect("=>")
    conclusion = r.atom("conclusion").text
    return (first, (premises, conclusion))


def _production(r):
    first = r.tok
    lhs = []
    while r.at("atom"):
        lhs.append(r.next().text)
    if not lhs:
        raise _error(WorkspaceSyntaxError, first.line, first.col, "production needs a left side")
    r.expect("->")
    rhs = []
    while r.at("atom"):
        rhs.append(r.next().text)
    return (first, (tuple(lhs), tuple(rhs)))


def _tm_rule(r):
    q = r.atom("state")
    s = r.atom("symbol")
    r.expect("->")
    act = r.atom("action")
    q2 = r.atom("state")
    return (q, TMRule(q.text, s.text, act.text, q2.text))


def _scale_item(r):
    t = r.atom("scale")
    if r.at(":"):
        r.next()
        lat = r.atom("lattice id")
        return (t, (t.text, lat))
    return (t, (t.text, None))


# per kind: key -> (item reader, repeatable, single-item)
SCHEMA = {
    "set": {"elements": (_atom_item, False, False)},
    "namedset": {"support": (_atom_item, False, False), "names": (_atom_item, False, False),
                 "rel": (_arrow_item, False, False)},
    "morphism": {"source": (_atom_item, False, True), "target": (_atom_item, False, True),
                 "f": (_arrow_item, False, False), "g": (_arrow_item, False, False)},
    "multiset": {"items": (_count_item, False, False)},
    "lattice": {"carrier": (_atom_item, False, False), "order": (_order_item, False, False)},
    "fuzzy": {"scale": (_scale_item, False, True), "members": (_degree_item, False, False)},
    "property": {"universe": (_atom_item, False, True), "scale": (_atom_item, False, True),
                 "values": (_arrow_item, False, False)},
    "calculus": {"axioms": (_atom_item, False, False), "rule": (_calculus_rule, True, True)},
    "automaton": {"inputs": (_atom_item, False, False), "states": (_atom_item, False, False),
                  "outputs": (_atom_item, False, False), "start": (_atom_item, False, True),
                  "final": (_atom_item, False, False), "delta": (_delta_item, False, False)},
    "grammar": {"variables": (_atom_item, False, False), "terminals": (_atom_item, False, False),
                "start": (_atom_item, False, True), "prod": (_production, True, True)},
    "tm": {"alphabet": (_atom_item, False, False), "blank": (_atom_item, False, True),
           "states": (_atom_item, False, False), "start": (_atom_item, False, True),
           "final": (_atom_item, False, False), "rule": (_tm_rule, True, True)},
}

REQUIRED = {
    "morphism": ("source", "target"),
    "fuzzy": ("scale",),
    "property": ("universe", "scale"),
    "automaton": ("start",),
    "grammar": ("start",),
    "tm": ("blank", "start"),
}


def _read_block(r: _Reader) -> Block:
    kw = r.atom("block keyword")
    if kw.text not in SCHEMA:
        raise _error(WorkspaceSyntaxError, kw.line, kw.col, f"unknown block kind {kw.text!r}")
    block = Block(kw.text, r.atom("block id"))
    r.expect("{")
    schema = SCHEMA[kw.text]
    seen = set()
    while not r.at("}"):
        key = r.atom("key")
        if key.text not in schema:
            raise _error(WorkspaceSyntaxError, key.line, key.col,
                         f"unknown key {key.text!r} in {kw.text} block")
        reader, repeatable, single = schema[key.text]
        if key.text in seen and not repeatable:
            raise _error(WorkspaceSyntaxError, key.line, key.col, f"duplicate key {key.text!r}")
        seen.add(key.text)
        r.expect(":")
        items = []
        if single:
            items.append(reader(r))
        else:
            while not r.at(";"):
                items.append(reader(r))
        r.expect(";")
        block.entries.append(Entry(key, items))
    r.expect("}")
    for key in REQUIRED.get(kw.text, ()):
        if key not in seen:
            raise _error(WorkspaceSyntaxError, kw.line, kw.col, f"{kw.text} {block.id.text}: missing key {key!r}")
    return block


def read_blocks(text: str) -> list[Block]:
    r = _Reader(tokenize(text))
    blocks = []
    while not r.at("end"):
        blocks.append(_read_block(r))
    return blocks


def _values(block: Block, key: str) -> list:
    return [v for e in block.get(key) for _, v in e.items]


def _located(block: Block, key: str) -> list:
    return [it for e in block.get(key) for it in e.items]


def _one(block: Block, key: str):
    vals = _values(block, key)
    return vals[0] if vals else None


class _Builder:
    def __init__(self, blocks: list[Block]):
        self.blocks = blocks
        self.ws = Workspace()

    def build(self) -> Workspace:
        by_kind: dict[str, list[Block]] = {k: [] for k in KINDS}
        for b in self.blocks:
            table = by_kind[b.kind]
            if any(o.id.text == b.id.text for o in table):
                raise _error(InvariantViolation, b.id.line, b.id.col, f"duplicate {b.kind} id {b.id.text!r}")
            table.append(b)
        # referenced kinds first
        for kind in ("set", "namedset", "lattice", "multiset", "property", "calculus",
                     "automaton", "grammar", "tm", "morphism", "fuzzy"):
            for b in by_kind[kind]:
                try:
                    obj = getattr(self, "_" + kind)(b)
                except NamedSetError as exc:
                    msg = str(exc).removeprefix(f"{b.id.text}: ")
                    raise _error(InvariantViolation, b.id.line, b.id.col, f"{b.kind} {b.id.text}: {msg}") from None
                getattr(self.ws, KINDS[kind])[b.id.text] = obj
        return self.ws

    def _set(self, b):
        return PlainSet(b.id.text, frozenset(_values(b, "elements")))

    def _namedset(self, b):
        support, names = set(_values(b, "support")), set(_values(b, "names"))
        for tok, (x, a) in _located(b, "rel"):
            for atom, where, pool in ((x, "support", support), (a, "names", names)):
                if atom not in pool:
                    raise _error(InvariantViolation, tok.line, tok.col,
                                 f"namedset {b.id.text}: dangling pair {x}->{a} ({atom!r} not in {where})")
        return NamedSet(b.id.text, frozenset(support), frozenset(names), frozenset(_values(b, "rel")))

    def _ref(self, b, key, attr, what):
        tok = [t for t, _ in _located(b, key)][0]
        table = getattr(self.ws, attr)
        if tok.text not in table:
            raise _error(UnknownReference, tok.line, tok.col, f"{b.kind} {b.id.text}: unknown {what} {tok.text!r}")
        return table[tok.text]

    def _mapping(self, b, key):
        m = {}
        for tok, (k, v) in _located(b, key):
            if k in m and m[k] != v:
                raise _error(InvariantViolation, tok.line, tok.col, f"{b.kind} {b.id.text}: {key} maps {k!r} twice")
            m[k] = v
        return m

    def _morphism(self, b):
        source = self._ref(b, "source", "namedsets", "namedset")
        target = self._ref(b, "target", "namedsets", "namedset")
        return Morphism(b.id.text, source, target, self._mapping(b, "f"), self._mapping(b, "g"))

    def _multiset(self, b):
        m = {}
        for tok, (e, k) in _located(b, "items"):
            if e in m:
                raise _error(InvariantViolation, tok.line, tok.col, f"multiset {b.id.text}: {e!r} listed twice")
            if k == 0:
                raise _error(InvariantViolation, tok.line, tok.col, f"multiset {b.id.text}: multiplicity of {e!r} is 0")
            m[e] = k
        return Multiset(b.id.text, m)

    def _lattice(self, b):
        return FiniteLattice(b.id.text, frozenset(_values(b, "carrier")), frozenset(_values(b, "order")))

    def _fuzzy(self, b):
        (kind_tok, (kind, lat_tok)), = _located(b, "scale")
        if kind == "lattice" and lat_tok is not None:
            if lat_tok.text not in self.ws.lattices:
                raise _error(UnknownReference, lat_tok.line, lat_tok.col,
                             f"fuzzy {b.id.text}: unknown lattice {lat_tok.text!r}")
            scale = Scale.of_lattice(self.ws.lattices[lat_tok.text])
        elif kind in SCALE_NAMES and lat_tok is None:
            scale = SCALE_NAMES[kind]
        else:
            raise _error(WorkspaceSyntaxError, kind_tok.line, kind_tok.col, f"unknown scale {kind!r}")
        members = {}
        for tok, (u, text, dtok) in _located(b, "members"):
            if u in members:
                raise _error(InvariantViolation, tok.line, tok.col, f"fuzzy {b.id.text}: {u!r} listed twice")
            try:
                members[u] = scale.parse(text)
            except NamedSetError as exc:
                raise _error(InvariantViolation, dtok.line, dtok.col, f"fuzzy {b.id.text}: {exc}") from None
        return FuzzySet(b.id.text, frozenset(members), scale, members)

    def _property(self, b):
        return Property(b.id.text, _one(b, "universe"), self._mapping(b, "values"), _one(b, "scale"))

    def _calculus(self, b):
        rules = []
        for tok, (premises, conclusion) in _located(b, "rule"):
            try:
                rules.append(GroundRule(frozenset(premises), conclusion))
            except NamedSetError as exc:
                raise _error(InvariantViolation, tok.line, tok.col, f"calculus {b.id.text}: {exc}") from None
        return Calculus(b.id.text, frozenset(_values(b, "axioms")), tuple(rules))

    def _automaton(self, b):
        delta = {}
        for tok, (k, v) in _located(b, "delta"):
            if k in delta:
                raise _error(InvariantViolation, tok.line, tok.col,
                             f"automaton {b.id.text}: two transitions on ({k[0]},{k[1]})")
            delta[k] = v
        return MealyAutomaton(b.id.text, frozenset(_values(b, "inputs")), frozenset(_values(b, "states")),
                              frozenset(_values(b, "outputs")), _one(b, "start"),
                              frozenset(_values(b, "final")), delta)

    def _grammar(self, b):
        prods = tuple(Production(lhs, rhs) for lhs, rhs in _values(b, "prod"))
        return Grammar(b.id.text, frozenset(_values(b, "variables")), frozenset(_values(b, "terminals")),
                       _one(b, "start"), prods)

    def _tm(self, b):
        return TuringMachine(b.id.text, frozenset(_values(b, "alphabet")), _one(b, "blank"),
                             frozenset(_values(b, "states")), _one(b, "start"),
                             frozenset(_values(b, "final")), tuple(_values(b, "rule")))


def parse_workspace(text: str) -> Workspace:
    """Parse and validate a whole workspace.

    Raises :class:`WorkspaceSyntaxError`, :class:`UnknownReference` or
    :class:`InvariantViolation`, each carrying a located diagnostic.
    """
    return _Builder(read_blocks(text)).build()


def load_workspace(path) -> Workspace:
    with open(path, encoding="utf-8") as fh:
        return parse_workspace(fh.read())
