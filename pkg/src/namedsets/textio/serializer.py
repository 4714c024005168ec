"""Canonical writer for workspaces.

Blocks come ordered by kind then id, items within a line are sorted, and
list-valued keys always appear even when empty, so structurally equal
workspaces serialize to identical text.
"""

from __future__ import annotations

import re

from ..lattice import reflexive_transitive_closure
from ..views import render_degree
from .workspace import KINDS, Workspace

_BARE = re.compile(r"[A-Za-z0-9_.+\-]+")
_ESCAPE = {"\\": "\\\\", '"': '\\"'}


def render_atom(a: str) -> str:
    if _BARE.fullmatch(a) and "->" not in a:
        return a
    return '"' + "".join(_ESCAPE.get(c, c) for c in a) + '"'


def _atoms(items) -> str:
    return " ".join(render_atom(a) for a in sorted(items))


def _pairs(pairs, sep="->") -> str:
    return " ".join(f"{render_atom(a)}{sep}{render_atom(b)}" for a, b in sorted(pairs))


def _line(key, body) -> str:
    return f"  {key}: {body};" if body else f"  {key}:;"


def _set(S):
    return [_line("elements", _atoms(S.elements))]


def _namedset(X):
    return [_line("support", _atoms(X.support)), _line("names", _atoms(X.reflector)),
            _line("rel", _pairs(X.relation))]


def _morphism(F):
    return [_line("source", render_atom(F.source.id)), _line("target", render_atom(F.target.id)),
            _line("f", _pairs(F.f.items())), _line("g", _pairs(F.g.items()))]


def _multiset(M):
    return [_line("items", " ".join(f"{render_atom(e)}:{k}" for e, k in sorted(M.multiplicity.items())))]


def _lattice(L):
    covers = L.covers()
    pairs = covers if reflexive_transitive_closure(L.carrier, covers) == L.order else \
        {(a, b) for a, b in L.order if a != b}
    return [_line("carrier", _atoms(L.carrier)), _line("order", _pairs(pairs, "<="))]


def _degree(d) -> str:
    # rationals are written unquoted as ``p/q``
    return render_atom(d) if isinstance(d, str) else render_degree(d)


def _fuzzy(F):
    scale = {"symmetric": "sym", "realline": "real"}.get(F.scale.kind, F.scale.kind)
    if F.scale.lattice is not None:
        scale = f"lattice:{render_atom(F.scale.lattice.id)}"
    members = " ".join(f"{render_atom(u)}:{_degree(d)}" for u, d in sorted(F.membership.items()))
    return [_line("scale", scale), _line("members", members)]


def _property(P):
    return [_line("universe", render_atom(P.universe_label)), _line("scale", render_atom(P.scale_label)),
            _line("values", _pairs(P.valuation.items()))]


def _calculus(C):
    lines = [_line("axioms", _atoms(C.axioms))]
    for r in C.rules:
        lines.append(_line("rule", f"{_atoms(r.premises)} => {render_atom(r.conclusion)}"))
    return lines


def _automaton(A):
    delta = " ".join(
        f"({render_atom(s)},{render_atom(q)})->({render_atom(q2)},{render_atom(o)})"
        for (s, q), (q2, o) in sorted(A.delta.items())
    )
    return [_line("inputs", _atoms(A.inputs)), _line("states", _atoms(A.states)),
            _line("outputs", _atoms(A.outputs)), _line("start", render_atom(A.start)),
            _line("final", _atoms(A.finals)), _line("delta", delta)]


def _grammar(G):
    lines = [_line("variables", _atoms(G.variables)), _line("terminals", _atoms(G.terminals)),
             _line("start", render_atom(G.start))]
    for p in G.productions:
        rhs = " ".join(render_atom(s) for s in p.rhs)
        lines.append(f"  prod: {' '.join(render_atom(s) for s in p.lhs)} ->{' ' + rhs if rhs else ''};")
    return lines


def _tm(T):
    lines = [_line("alphabet", _atoms(T.alphabet)), _line("blank", render_atom(T.blank)),
             _line("states", _atoms(T.states)), _line("start", render_atom(T.start)),
             _line("final", _atoms(T.finals))]
    for r in T.rules:
        lines.append(_line("rule", " ".join(render_atom(x) for x in (r.state, r.read)) + " -> "
                           + " ".join(render_atom(x) for x in (r.action, r.next))))
    return lines


_WRITERS = {
    "set": _set, "namedset": _namedset, "morphism": _morphism, "multiset": _multiset,
    "lattice": _lattice, "fuzzy": _fuzzy, "property": _property, "calculus": _calculus,
    "automaton": _automaton, "grammar": _grammar, "tm": _tm,
}


def serialize_block(kind: str, id: str, obj) -> str:
    return "\n".join([f"{kind} {render_atom(id)} {{", *_WRITERS[kind](obj), "}"]) + "\n"


def serialize_workspace(W: Workspace) -> str:
    blocks = []
    for kind, attr in KINDS.items():
        table = getattr(W, attr)
        for id in sorted(table):
            blocks.append(serialize_block(kind, id, table[id]))
    return "\n".join(blocks)
