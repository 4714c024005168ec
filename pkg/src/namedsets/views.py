"""Classical structures read as named sets.

Plain sets become singlenamed sets, functions are total functional named
sets, multisets appear both as multiplicity maps and as tokens sharing a
name, and fuzzy sets are membership graphs into a scale of degrees.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Union

from .errors import (
    BadNumeral,
    DegreeOutOfScale,
    InvalidLattice,
    NotFunctional,
    NotSinglenamed,
    TokenClash,
)
from .kernel import Atom, NamedSet, check_atom, classify, factual_names
from .lattice import FiniteLattice, validate_lattice
from .numerals import DECIMAL, NumeralScale

TOKEN_SEP = "#"

Degree = Union[Fraction, Atom]


@dataclass(frozen=True)
class PlainSet:
    """A finite set with a label. Equality compares elements only."""

    name: Atom = field(compare=False)
    elements: frozenset[Atom]

    def __post_init__(self):
        check_atom(self.name)
        object.__setattr__(self, "elements", frozenset(check_atom(e) for e in self.elements))

    def __len__(self):
        return len(self.elements)


def embed_set(S: PlainSet, element_name: Atom) -> NamedSet:
    """Every element of ``S`` receives the common name ``element_name``."""
    return NamedSet(S.name, S.elements, frozenset({element_name}),
                    frozenset((x, element_name) for x in S.elements))


def project_set(X: NamedSet) -> PlainSet:
    names = factual_names(X)
    if len(names) != 1:
        raise NotSinglenamed(f"{X.id} has {len(names)} factual names")
    (name,) = names
    return PlainSet(name, X.support)


def is_function(X: NamedSet) -> bool:
    c = classify(X)
    return c.functional and c.total


def _require_function(X: NamedSet) -> dict[Atom, Atom]:
    c = classify(X)
    if not c.functional:
        raise NotFunctional(f"{X.id} gives some element more than one name")
    if not c.total:
        raise NotFunctional(f"{X.id} leaves some element unnamed")
    return dict(X.relation)


@dataclass(frozen=True)
class Multiset:
    """Multiplicity form of a multiset. Zero entries are dropped."""

    name: Atom = field(compare=False)
    multiplicity: Mapping[Atom, int]

    def __post_init__(self):
        check_atom(self.name)
        m = {}
        for e, k in self.multiplicity.items():
            check_atom(e)
            if not isinstance(k, int) or isinstance(k, bool) or k < 0:
                raise ValueError(f"multiplicity of {e!r} must be a natural number, got {k!r}")
            if k:
                m[e] = k
        object.__setattr__(self, "multiplicity", MappingProxyType(m))

    def __hash__(self):
        return hash(frozenset(self.multiplicity.items()))

    def __len__(self):
        return sum(self.multiplicity.values())

    def __repr__(self):
        items = ", ".join(f"{e}:{k}" for e, k in sorted(self.multiplicity.items()))
        return f"Multiset({self.name!r}, {{{items}}})"


def multiset_as_named_set(M: Multiset, scale: NumeralScale = DECIMAL) -> NamedSet:
    rel = frozenset((e, scale.render(k)) for e, k in M.multiplicity.items())
    return NamedSet(M.name, frozenset(M.multiplicity), frozenset(a for _, a in rel), rel)


def named_set_as_multiset(X: NamedSet, scale: NumeralScale = DECIMAL) -> Multiset:
    graph = _require_function(X)
    try:
        counts = {e: scale.value(a) for e, a in graph.items()}
    except BadNumeral as exc:
        raise BadNumeral(f"{X.id}: {exc}") from None
    return Multiset(X.id, counts)


def tokenize(M: Multiset) -> NamedSet:
    """Token form: ``e#1 .. e#k`` all carry the name ``e``."""
    for e in M.multiplicity:
        if TOKEN_SEP in e:
            raise TokenClash(f"element {e!r} already contains {TOKEN_SEP!r}")
    rel = frozenset((f"{e}{TOKEN_SEP}{i}", e)
                    for e, k in M.multiplicity.items() for i in range(1, k + 1))
    return NamedSet(M.name, frozenset(t for t, _ in rel), frozenset(M.multiplicity), rel)


def multiplicity_from_tokens(T: NamedSet) -> Multiset:
    graph = _require_function(T)
    return Multiset(T.id, dict(Counter(graph.values())))


@dataclass(frozen=True)
class Scale:
    """Codomain of membership degrees."""

    kind: str
    lattice: FiniteLattice | None = None

    KINDS = ("unit", "symmetric", "realline", "lattice")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown scale kind {self.kind!r}")
        if (self.kind == "lattice") != (self.lattice is not None):
            raise ValueError("a lattice scale needs exactly one lattice")

    @classmethod
    def of_lattice(cls, L: FiniteLattice) -> "Scale":
        report = validate_lattice(L)
        if not report:
            raise InvalidLattice(f"{L.id} is not a lattice: {report.reason} {report.pair or ''}".rstrip())
        return cls("lattice", L)

    @property
    def label(self) -> str:
        return f"lattice:{self.lattice.id}" if self.lattice else self.kind

    def admits(self, degree: Degree) -> bool:
        if self.kind == "lattice":
            return isinstance(degree, str) and degree in self.lattice.carrier
        if not isinstance(degree, Fraction):
            return False
        if self.kind == "unit":
            return 0 <= degree <= 1
        if self.kind == "symmetric":
            return -1 <= degree <= 1
        return True

    def parse(self, text: Atom) -> Degree:
        """Read a degree atom (``"p/q"`` or ``"p"`` for rational scales)."""
        if self.kind == "lattice":
            degree: Degree = text
        else:
            degree = parse_rational(text)
        if not self.admits(degree):
            raise DegreeOutOfScale(f"degree {text!r} is outside the {self.label} scale")
        return degree


UNIT = Scale("unit")
SYMMETRIC = Scale("symmetric")
REALLINE = Scale("realline")


def parse_rational(text: str) -> Fraction:
    try:
        num, _, den = text.partition("/")
        if not num.lstrip("+-").isdigit() or (den and not den.isdigit()):
            raise ValueError
        return Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise DegreeOutOfScale(f"{text!r} is not a rational degree") from None


def render_degree(degree: Degree) -> Atom:
    """Canonical atom of a degree; rationals in lowest terms, ``"p"`` for integers."""
    if isinstance(degree, Fraction):
        return str(degree)
    return degree


@dataclass(frozen=True)
class FuzzySet:
    id: Atom
    universe: frozenset[Atom]
    scale: Scale
    membership: Mapping[Atom, Degree]

    def __post_init__(self):
        check_atom(self.id)
        m = {}
        for u, d in self.membership.items():
            if isinstance(d, (int, Fraction)) and not isinstance(d, bool):
                d = Fraction(d)
            if not self.scale.admits(d):
                raise DegreeOutOfScale(f"{self.id}: degree {d} of {u!r} is outside the {self.scale.label} scale")
            m[check_atom(u)] = d
        universe = frozenset(self.universe)
        if set(m) != universe:
            raise NotFunctional(f"{self.id}: membership must be defined on exactly the universe")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "membership", MappingProxyType(m))

    def __hash__(self):
        return hash((self.id, self.universe, self.scale, frozenset(self.membership.items())))


def fuzzy_set(id: Atom, membership: Mapping[Atom, Degree], scale: Scale = UNIT) -> FuzzySet:
    return FuzzySet(id, frozenset(membership), scale, membership)


def fuzzy_as_named_set(F: FuzzySet) -> NamedSet:
    rel = frozenset((u, render_degree(d)) for u, d in F.membership.items())
    return NamedSet(F.id, F.universe, frozenset(a for _, a in rel), rel)


def named_set_as_fuzzy(X: NamedSet, scale: Scale) -> FuzzySet:
    graph = _require_function(X)
    return FuzzySet(X.id, X.support, scale, {u: scale.parse(a) for u, a in graph.items()})
