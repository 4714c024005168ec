from __future__ import annotations

from dataclasses import dataclass, field, fields

from ..kernel import Morphism, NamedSet
from ..lattice import FiniteLattice
from ..properties import Property
from ..structures import Calculus, Grammar, MealyAutomaton, TuringMachine
from ..views import FuzzySet, Multiset, PlainSet

# block keyword -> Workspace attribute, in canonical output order
KINDS = {
    "set": "sets",
    "namedset": "namedsets",
    "morphism": "morphisms",
    "multiset": "multisets",
    "lattice": "lattices",
    "fuzzy": "fuzzy",
    "property": "properties",
    "calculus": "calculi",
    "automaton": "automata",
    "grammar": "grammars",
    "tm": "tms",
}


@dataclass
class Workspace:
    sets: dict[str, PlainSet] = field(default_factory=dict)
    namedsets: dict[str, NamedSet] = field(default_factory=dict)
    morphisms: dict[str, Morphism] = field(default_factory=dict)
    multisets: dict[str, Multiset] = field(default_factory=dict)
    lattices: dict[str, FiniteLattice] = field(default_factory=dict)
    fuzzy: dict[str, FuzzySet] = field(default_factory=dict)
    properties: dict[str, Property] = field(default_factory=dict)
    calculi: dict[str, Calculus] = field(default_factory=dict)
    automata: dict[str, MealyAutomaton] = field(default_factory=dict)
    grammars: dict[str, Grammar] = field(default_factory=dict)
    tms: dict[str, TuringMachine] = field(default_factory=dict)

    def __len__(self):
        return sum(len(getattr(self, f.name)) for f in fields(self))

    def counts(self) -> dict[str, int]:
        return {kind: len(getattr(self, attr)) for kind, attr in KINDS.items()}

    def find(self, id: str, *kinds: str):
        """Look ``id`` up among the given block kinds (all kinds if none).

        Returns ``(kind, object)``; raises ``KeyError`` when absent or
        ambiguous.
        """
        hits = [(k, getattr(self, KINDS[k])[id]) for k in (kinds or KINDS) if id in getattr(self, KINDS[k])]
        if not hits:
            wanted = "/".join(kinds) if kinds else "object"
            raise KeyError(f"no {wanted} named {id!r}")
        if len(hits) > 1:
            raise KeyError(f"{id!r} is ambiguous: {', '.join(k for k, _ in hits)}")
        return hits[0]


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    line: int
    column: int
    message: str

    def __str__(self):
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class WorkspaceError(Exception):
    """Raised by the parser; carries located diagnostics."""

    exit_code = 2

    def __init__(self, diagnostic: Diagnostic):
        super().__init__(str(diagnostic))
        self.diagnostics = [diagnostic]

    @property
    def diagnostic(self) -> Diagnostic:
        return self.diagnostics[0]


class WorkspaceSyntaxError(WorkspaceError):
    exit_code = 3


class UnknownReference(WorkspaceError):
    pass


class InvariantViolation(WorkspaceError):
    pass
