"""
Workspace files
===============

A ``.triad`` file holds any number of blocks. Loading is all or nothing,
and the writer produces one canonical text per workspace.
"""

from namedsets.textio import parse_workspace, serialize_workspace
from namedsets.textio.workspace import WorkspaceError

text = """
# blocks may come in any order
tm Succ { alphabet: 1 _; blank: _; states: q0 qh; start: q0; final: qh;
          rule: q0 _ -> 1 qh; rule: q0 1 -> R q0; }
namedset X { support: b a; names: n; rel: b->n a->n; }
multiset M { items: b:3 a:2; }
set "a set" { elements: "x y" z; }
"""

W = parse_workspace(text)
print(W.counts())
canonical = serialize_workspace(W)
print(canonical)
print(parse_workspace(canonical) == W)

# errors carry a line and column; nothing is loaded
try:
    parse_workspace("namedset X {\n  support: a;\n  names: n;\n  rel: a->n c->n;\n}")
except WorkspaceError as exc:
    for d in exc.diagnostics:
        print(d)
