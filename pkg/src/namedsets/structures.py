"""Calculi, valuations, Mealy automata, unrestricted grammars and Turing
machines, with desk-scale execution and triad decompositions.

Rules of every kind are kept in a canonical sorted order so that a rule
index is stable across parsing and reformatting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import InvalidStructure, NotDeterministic, UnknownSymbol
from .kernel import Atom, NamedSet, check_atom

Word = tuple[Atom, ...]


def as_word(word: str | Sequence[Atom]) -> Word:
    """Split a string into single-character symbols, or whitespace-separated
    symbols when it contains whitespace; sequences pass through."""
    if isinstance(word, str):
        return tuple(word.split()) if any(c.isspace() for c in word) else tuple(word)
    return tuple(word)


def render_word(word: Sequence[Atom], empty: str = "") -> str:
    if not word:
        return empty
    sep = "" if all(len(s) == 1 for s in word) else " "
    return sep.join(word)


# ---------------------------------------------------------------- calculi

@dataclass(frozen=True)
class GroundRule:
    """Variable-free deduction rule ``premises => conclusion``."""

    premises: frozenset[Atom]
    conclusion: Atom

    def __post_init__(self):
        premises = frozenset(check_atom(p) for p in self.premises)
        if not premises:
            raise InvalidStructure("a rule needs at least one premise; premise-free sentences are axioms")
        object.__setattr__(self, "premises", premises)
        check_atom(self.conclusion)

    def sort_key(self):
        return (tuple(sorted(self.premises)), self.conclusion)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"{' '.join(sorted(self.premises))} => {self.conclusion}"


def rule(premises: Iterable[Atom] | Atom, conclusion: Atom) -> GroundRule:
    if isinstance(premises, str):
        premises = [premises]
    return GroundRule(frozenset(premises), conclusion)


@dataclass(frozen=True)
class Calculus:
    id: Atom
    axioms: frozenset[Atom]
    rules: tuple[GroundRule, ...]

    def __post_init__(self):
        check_atom(self.id)
        object.__setattr__(self, "axioms", frozenset(check_atom(a) for a in self.axioms))
        object.__setattr__(self, "rules", tuple(sorted(set(self.rules), key=GroundRule.sort_key)))


def deduce(C: Calculus, depth: int) -> frozenset[Atom]:
    """Theorems derivable with derivation trees of height at most ``depth``."""
    theorems = set(C.axioms)
    for _ in range(depth):
        new = {r.conclusion for r in C.rules if r.premises <= theorems}
        if new <= theorems:
            break
        theorems |= new
    return frozenset(theorems)


def deduction_named_set(C: Calculus, depth: int) -> NamedSet:
    """Relate each axiom to every theorem it helps derive within ``depth``.

    The axioms used somewhere in a derivation of ``t`` are ``t`` itself when
    it is an axiom, together with, for each applicable rule concluding
    ``t``, the axioms used for each of its premises one level down.
    """
    uses: dict[Atom, frozenset[Atom]] = {a: frozenset({a}) for a in C.axioms}
    for _ in range(depth):
        step = {a: set(v) for a, v in uses.items()}
        for r in C.rules:
            if all(p in uses for p in r.premises):
                acc = step.setdefault(r.conclusion, set())
                for p in r.premises:
                    acc |= uses[p]
        step_frozen = {t: frozenset(v) for t, v in step.items()}
        if step_frozen == uses:
            break
        uses = step_frozen
    rel = frozenset((a, t) for t, axioms in uses.items() for a in axioms)
    return NamedSet(C.id, C.axioms, frozenset(uses), rel)


@dataclass(frozen=True)
class Valuation:
    """A truth assignment, kept as raw pairs so a non-function can be reported."""

    id: Atom
    truth_kind: str
    assignment: tuple[tuple[Atom, object], ...]

    def __post_init__(self):
        if self.truth_kind not in ("classical", "unit"):
            raise ValueError(f"unknown truth kind {self.truth_kind!r}")
        object.__setattr__(self, "assignment", tuple((s, v) for s, v in self.assignment))


@dataclass(frozen=True)
class ValuationReport:
    valid: bool
    sentence: Atom | None = None
    reason: str = ""

    def __bool__(self):
        return self.valid


def _admissible(kind: str, value) -> bool:
    if kind == "classical":
        return value in ("1", "0")
    if isinstance(value, str):
        try:
            value = Fraction(value)
        except (ValueError, ZeroDivisionError):
            return False
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        return False
    return 0 <= value <= 1


def validate_valuation(V: Valuation) -> ValuationReport:
    seen: dict[Atom, object] = {}
    for sentence, value in V.assignment:
        if not _admissible(V.truth_kind, value):
            return ValuationReport(False, sentence, f"value {value!r} is not a {V.truth_kind} truth value")
        if sentence in seen and seen[sentence] != value:
            return ValuationReport(False, sentence, "sentence receives two truth values")
        seen[sentence] = value
    return ValuationReport(True)


# ---------------------------------------------------------------- automata

@dataclass(frozen=True)
class MealyAutomaton:
    id: Atom
    inputs: frozenset[Atom]
    states: frozenset[Atom]
    outputs: frozenset[Atom]
    start: Atom
    finals: frozenset[Atom]
    delta: Mapping[tuple[Atom, Atom], tuple[Atom, Atom]]

    def __post_init__(self):
        check_atom(self.id)
        for name in ("inputs", "states", "outputs", "finals"):
            object.__setattr__(self, name, frozenset(check_atom(a) for a in getattr(self, name)))
        if self.start not in self.states:
            raise InvalidStructure(f"{self.id}: start state {self.start!r} is not a state")
        if not self.finals <= self.states:
            raise InvalidStructure(f"{self.id}: final states {sorted(self.finals - self.states)} are not states")
        delta = dict(self.delta)
        for (s, q), (q2, o) in sorted(delta.items()):
            if s not in self.inputs or q not in self.states or q2 not in self.states or o not in self.outputs:
                raise InvalidStructure(f"{self.id}: transition ({s},{q})->({q2},{o}) uses undeclared atoms")
        missing = sorted((s, q) for s in self.inputs for q in self.states if (s, q) not in delta)
        if missing:
            raise InvalidStructure(f"{self.id}: delta is undefined on {missing[0]}")
        object.__setattr__(self, "delta", MappingProxyType(delta))

    def __hash__(self):
        return hash((self.id, self.states, frozenset(self.delta.items())))


@dataclass(frozen=True)
class AutomatonRun:
    output: Word
    end: Atom
    accepted: bool


def run_automaton(A: MealyAutomaton, word: str | Sequence[Atom]) -> AutomatonRun:
    word = as_word(word)
    for s in word:
        if s not in A.inputs:
            raise UnknownSymbol(f"{s!r} is not an input symbol of {A.id}")
    q, out = A.start, []
    for s in word:
        q, o = A.delta[(s, q)]
        out.append(o)
    return AutomatonRun(tuple(out), q, q in A.finals)


# ---------------------------------------------------------------- grammars

@dataclass(frozen=True, order=True)
class Production:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        object.__setattr__(self, "lhs", as_word(self.lhs))
        object.__setattr__(self, "rhs", as_word(self.rhs))
        if not self.lhs:
            raise InvalidStructure("a production needs a nonempty left side")

    def __repr__(self):
        return f"{' '.join(self.lhs)} -> {' '.join(self.rhs)}".rstrip()


@dataclass(frozen=True)
class Grammar:
    id: Atom
    variables: frozenset[Atom]
    terminals: frozenset[Atom]
    start: Atom
    productions: tuple[Production, ...]

    def __post_init__(self):
        check_atom(self.id)
        object.__setattr__(self, "variables", frozenset(check_atom(v) for v in self.variables))
        object.__setattr__(self, "terminals", frozenset(check_atom(t) for t in self.terminals))
        object.__setattr__(self, "productions", tuple(sorted(set(self.productions))))
        if self.variables & self.terminals:
            raise InvalidStructure(f"{self.id}: variables and terminals overlap on {sorted(self.variables & self.terminals)}")
        if self.start not in self.variables:
            raise InvalidStructure(f"{self.id}: start symbol {self.start!r} is not a variable")
        symbols = self.variables | self.terminals
        for p in self.productions:
            if not any(s in self.variables for s in p.lhs):
                raise InvalidStructure(f"{self.id}: left side of {p!r} contains no variable")
            unknown = [s for s in p.lhs + p.rhs if s not in symbols]
            if unknown:
                raise InvalidStructure(f"{self.id}: {p!r} uses undeclared symbol {unknown[0]!r}")


class _NotFound:
    def __repr__(self):
        return "NOT_FOUND_WITHIN_BOUNDS"

    def __bool__(self):
        return False


NOT_FOUND_WITHIN_BOUNDS = _NotFound()


def rewrites(G: Grammar, form: Word) -> list[Word]:
    """All forms reachable from ``form`` by one production at one occurrence."""
    out = set()
    for p in G.productions:
        k = len(p.lhs)
        for i in range(len(form) - k + 1):
            if form[i:i + k] == p.lhs:
                out.add(form[:i] + p.rhs + form[i + k:])
    return sorted(out)


def derive_grammar(G: Grammar, target: str | Sequence[Atom], max_steps: int, max_len: int):
    """Shortest derivation of ``target`` from the start symbol.

    Breadth-first over sentential forms, pruning forms longer than
    ``max_len``. Levels are expanded in order and children sorted, so the
    derivation returned is the lexicographically least among the shortest.
    Returns a tuple of forms, or :data:`NOT_FOUND_WITHIN_BOUNDS`.
    """
    target = as_word(target)
    bad = [s for s in target if s not in G.terminals]
    if bad:
        raise UnknownSymbol(f"{bad[0]!r} is not a terminal of {G.id}")
    start: Word = (G.start,)
    parent: dict[Word, Word | None] = {start: None}
    frontier = [start]
    found = start == target
    for _ in range(max_steps):
        if found or not frontier:
            break
        nxt = []
        for form in frontier:
            for child in rewrites(G, form):
                if len(child) > max_len or child in parent:
                    continue
                parent[child] = form
                nxt.append(child)
                if child == target:
                    found = True
                    break
            if found:
                break
        frontier = nxt
    if not found:
        return NOT_FOUND_WITHIN_BOUNDS
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


# ---------------------------------------------------------------- Turing machines

MOVES = {"R": 1, "L": -1}


@dataclass(frozen=True, order=True)
class TMRule:
    """``state read -> action next``; action is ``R``, ``L`` or a symbol to write."""

    state: Atom
    read: Atom
    action: Atom
    next: Atom

    @property
    def moves(self) -> bool:
        return self.action in MOVES

    @property
    def left_part(self) -> tuple[Atom, Atom]:
        return (self.state, self.read)

    def __repr__(self):
        return f"{self.state} {self.read} -> {self.action} {self.next}"


@dataclass(frozen=True)
class TuringMachine:
    id: Atom
    alphabet: frozenset[Atom]
    blank: Atom
    states: frozenset[Atom]
    start: Atom
    finals: frozenset[Atom]
    rules: tuple[TMRule, ...]

    def __post_init__(self):
        check_atom(self.id)
        for name in ("alphabet", "states", "finals"):
            object.__setattr__(self, name, frozenset(check_atom(a) for a in getattr(self, name)))
        object.__setattr__(self, "rules", tuple(sorted(set(self.rules))))
        if self.blank not in self.alphabet:
            raise InvalidStructure(f"{self.id}: blank {self.blank!r} is not in the alphabet")
        clash = sorted(self.alphabet & set(MOVES))
        if clash:
            raise InvalidStructure(f"{self.id}: {clash[0]!r} is reserved for head moves")
        if self.start not in self.states:
            raise InvalidStructure(f"{self.id}: start state {self.start!r} is not a state")
        if not self.finals <= self.states:
            raise InvalidStructure(f"{self.id}: final states must be states")
        for r in self.rules:
            if r.state not in self.states or r.next not in self.states:
                raise InvalidStructure(f"{self.id}: rule {r!r} uses an undeclared state")
            if r.read not in self.alphabet or not (r.moves or r.action in self.alphabet):
                raise InvalidStructure(f"{self.id}: rule {r!r} uses an undeclared symbol")


@dataclass(frozen=True)
class DeterminismCheck:
    ok: bool
    duplicates: tuple[tuple[Atom, Atom], ...] = ()

    @property
    def witness(self):
        return self.duplicates[0] if self.duplicates else None

    def __bool__(self):
        return self.ok


def check_deterministic(T: TuringMachine) -> DeterminismCheck:
    seen, dup = set(), set()
    for r in T.rules:
        (dup if r.left_part in seen else seen).add(r.left_part)
    return DeterminismCheck(not dup, tuple(sorted(dup)))


@dataclass(frozen=True)
class TMRun:
    tape: Word
    halted: bool
    steps: int


def run_tm(T: TuringMachine, word: str | Sequence[Atom], max_steps: int) -> TMRun:
    """Run a deterministic machine from head position 0.

    Halts on entering a final state or when no rule applies. Returns the
    tape with leading and trailing blanks trimmed.
    """
    det = check_deterministic(T)
    if not det:
        raise NotDeterministic(f"{T.id}: several rules share the left part {det.witness}")
    word = as_word(word)
    for s in word:
        if s not in T.alphabet:
            raise UnknownSymbol(f"{s!r} is not in the alphabet of {T.id}")
    table = {r.left_part: r for r in T.rules}
    tape = {i: s for i, s in enumerate(word) if s != T.blank}
    head, state, steps, halted = 0, T.start, 0, False
    while True:
        if state in T.finals:
            halted = True
            break
        if steps >= max_steps:
            break
        r = table.get((state, tape.get(head, T.blank)))
        if r is None:
            halted = True
            break
        if r.moves:
            head += MOVES[r.action]
        elif r.action == T.blank:
            tape.pop(head, None)
        else:
            tape[head] = r.action
        state = r.next
        steps += 1
    if tape:
        lo, hi = min(tape), max(tape)
        out = tuple(tape.get(i, T.blank) for i in range(lo, hi + 1))
    else:
        out = ()
    return TMRun(out, halted, steps)


# ---------------------------------------------------------------- triads

@dataclass(frozen=True)
class Leaf:
    """Leaf payload: ``atoms`` (a set), ``atom``, ``namedsets`` (rules), or
    ``placeholder`` for components the description does not materialize."""

    kind: str
    payload: object = None

    def render(self) -> str:
        if self.kind == "atoms":
            return "{" + " ".join(sorted(self.payload)) + "}"
        if self.kind == "atom":
            return str(self.payload)
        if self.kind == "namedsets":
            return "[" + "; ".join(
                f"{' '.join(sorted(X.support))} -> {' '.join(sorted(X.reflector))}" for X in self.payload
            ) + "]"
        if self.kind == "namedset":
            X = self.payload
            return "[" + "; ".join(f"{x} -> {a}" for x, a in sorted(X.relation)) + "]"
        return f"<{self.payload}>"


@dataclass(frozen=True)
class TriadTree:
    label: Atom
    roles: tuple[str, str, str]
    children: tuple["TriadTree | Leaf", "TriadTree | Leaf", "TriadTree | Leaf"]

    def __post_init__(self):
        if len(self.roles) != 3 or len(self.children) != 3:
            raise InvalidStructure(f"triad {self.label!r} must have exactly three children")

    def internal_nodes(self):
        yield self
        for c in self.children:
            if isinstance(c, TriadTree):
                yield from c.internal_nodes()

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children if isinstance(c, TriadTree)), default=0)

    def positions(self) -> list[tuple[str, ...]]:
        """Role paths of every labeled position below the root."""
        out = []
        for role, c in zip(self.roles, self.children):
            out.append((role,))
            if isinstance(c, TriadTree):
                out.extend((role,) + p for p in c.positions())
        return out

    def render(self, indent: str = "") -> str:
        lines = [f"{indent}{self.label} ({', '.join(self.roles)})"]
        for role, c in zip(self.roles, self.children):
            if isinstance(c, TriadTree):
                lines.append(f"{indent}  {role}:")
                lines.append(c.render(indent + "    "))
            else:
                lines.append(f"{indent}  {role}: {c.render()}")
        return "\n".join(lines)


def _rule_sets(rules) -> Leaf:
    return Leaf("namedsets", tuple(rule_as_named_set(r, id=f"r{i}") for i, r in enumerate(rules)))


def decompose(structure) -> TriadTree:
    if isinstance(structure, TuringMachine):
        T = structure
        letters = T.alphabet - {T.blank}
        language = TriadTree("L", ("L_I", "L_W", "L_O"),
                             (Leaf("atoms", letters), Leaf("atoms", T.alphabet), Leaf("atoms", letters)))
        device = TriadTree("D", ("H", "P", "M"),
                           (Leaf("placeholder", "head"), _rule_sets(T.rules), Leaf("placeholder", "tape")))
        states = TriadTree("Q", ("q0", "Q", "F"),
                           (Leaf("atom", T.start), Leaf("atoms", T.states), Leaf("atoms", T.finals)))
        return TriadTree(T.id, ("L", "D", "Q"), (language, device, states))
    if isinstance(structure, MealyAutomaton):
        A = structure
        language = TriadTree("L", ("Σ", "Q", "Ω"),
                             (Leaf("atoms", A.inputs), Leaf("atoms", A.states), Leaf("atoms", A.outputs)))
        states = TriadTree("S", ("Q", "q0", "F"),
                           (Leaf("atoms", A.states), Leaf("atom", A.start), Leaf("atoms", A.finals)))
        return TriadTree(A.id, ("L", "S", "δ"), (language, states, Leaf("namedset", transition_named_set(A))))
    if isinstance(structure, Grammar):
        G = structure
        lexical = TriadTree("L", ("V", "Σ", "·"),
                            (Leaf("atoms", G.variables), Leaf("atoms", G.terminals), Leaf("placeholder", "unused")))
        return TriadTree(G.id, ("L", "S", "P"), (lexical, Leaf("atom", G.start), _rule_sets(G.productions)))
    if isinstance(structure, Calculus):
        C = structure
        return TriadTree(C.id, ("A", "R", "T"),
                         (Leaf("atoms", C.axioms), _rule_sets(C.rules), Leaf("placeholder", "theorems")))
    raise TypeError(f"cannot decompose {type(structure).__name__}")


def transition_named_set(A: MealyAutomaton) -> NamedSet:
    rel = frozenset((f"({s},{q})", f"({q2},{o})") for (s, q), (q2, o) in A.delta.items())
    return NamedSet(f"delta_{A.id}", frozenset(x for x, _ in rel), frozenset(a for _, a in rel), rel)


def rule_as_named_set(r: Union[TMRule, Production, GroundRule], id: Atom = "rule") -> NamedSet:
    if isinstance(r, GroundRule):
        return NamedSet(id, r.premises, frozenset({r.conclusion}),
                        frozenset((p, r.conclusion) for p in r.premises))
    if isinstance(r, TMRule):
        left, right = f"{r.state} {r.read}", f"{r.action} {r.next}"
    elif isinstance(r, Production):
        left, right = render_word(r.lhs), render_word(r.rhs, empty="ε")
    else:
        raise TypeError(f"not a rule: {r!r}")
    return NamedSet(id, frozenset({left}), frozenset({right}), frozenset({(left, right)}))


def rules_of(structure) -> tuple:
    if isinstance(structure, TuringMachine):
        return structure.rules
    if isinstance(structure, Grammar):
        return structure.productions
    if isinstance(structure, Calculus):
        return structure.rules
    raise TypeError(f"{type(structure).__name__} has no rules")
