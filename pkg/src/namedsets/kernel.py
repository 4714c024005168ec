"""Finite named sets, their morphisms, and extensional category-law checks.

A named set is a triad ``(support, relation, reflector)`` where the naming
relation is a set of pairs inside ``support x reflector``. Only finite,
set-theoretical named sets are represented; every check is decidable by
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import (
    DanglingPair,
    InvalidAtom,
    NonComposable,
    PartialMap,
    UnknownElement,
    UnknownObject,
)

Atom = str
Pair = tuple[Atom, Atom]


def check_atom(text) -> Atom:
    if not isinstance(text, str) or not text:
        raise InvalidAtom(f"atom must be a nonempty string, got {text!r}")
    if not text.isprintable():
        raise InvalidAtom(f"atom contains non-printable characters: {text!r}")
    return text


def _atoms(items: Iterable[Atom]) -> frozenset[Atom]:
    return frozenset(check_atom(a) for a in items)


@dataclass(frozen=True)
class NamedSet:
    """A finite triad ``(support, relation, reflector)``.

    Equality ignores ``id``: two named sets are equal when their supports,
    reflectors and naming relations coincide.
    """

    id: Atom = field(compare=False)
    support: frozenset[Atom]
    reflector: frozenset[Atom]
    relation: frozenset[Pair]

    def __post_init__(self):
        check_atom(self.id)
        object.__setattr__(self, "support", _atoms(self.support))
        object.__setattr__(self, "reflector", _atoms(self.reflector))
        rel = frozenset((check_atom(x), check_atom(a)) for x, a in self.relation)
        for x, a in sorted(rel):
            if x not in self.support:
                raise DanglingPair(f"pair ({x}, {a}): {x!r} is not in the support of {self.id}")
            if a not in self.reflector:
                raise DanglingPair(f"pair ({x}, {a}): {a!r} is not in the reflector of {self.id}")
        object.__setattr__(self, "relation", rel)

    def names_of(self, x: Atom) -> frozenset[Atom]:
        return names_of(self, x)

    def __repr__(self):
        rel = " ".join(f"{x}->{a}" for x, a in sorted(self.relation))
        return (
            f"NamedSet({self.id!r}, support={sorted(self.support)}, "
            f"reflector={sorted(self.reflector)}, relation=[{rel}])"
        )


def make_named_set(id: Atom, support: Iterable[Atom], names: Iterable[Atom],
                   relation: Iterable[Pair]) -> NamedSet:
    """Build and validate a named set; raises :class:`DanglingPair`."""
    return NamedSet(id, frozenset(support), frozenset(names), frozenset(tuple(p) for p in relation))


def factual_names(X: NamedSet) -> frozenset[Atom]:
    return frozenset(a for _, a in X.relation)


def names_of(X: NamedSet, x: Atom) -> frozenset[Atom]:
    """Complete name of ``x``: every name it carries (possibly none)."""
    if x not in X.support:
        raise UnknownElement(f"{x!r} is not in the support of {X.id}")
    return frozenset(a for y, a in X.relation if y == x)


@dataclass(frozen=True)
class Classification:
    functional: bool
    total: bool
    normalized: bool
    singlenamed: bool
    individually_named: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "functional": self.functional,
            "individuallyNamed": self.individually_named,
            "normalized": self.normalized,
            "singlenamed": self.singlenamed,
            "total": self.total,
        }


def classify(X: NamedSet) -> Classification:
    counts = dict.fromkeys(X.support, 0)
    for x, _ in X.relation:
        counts[x] += 1
    functional = all(c <= 1 for c in counts.values())
    total = all(c >= 1 for c in counts.values())
    factual = factual_names(X)
    normalized = factual == X.reflector
    # bijection onto the whole reflector, not just onto the factual names
    injective = len(factual) == len(X.relation)
    individually = functional and total and normalized and injective
    return Classification(
        functional=functional,
        total=total,
        normalized=normalized,
        singlenamed=len(factual) == 1,
        individually_named=individually,
    )


def restrict(X: NamedSet, support: Iterable[Atom], names: Iterable[Atom], id: Atom | None = None) -> NamedSet:
    """The named subset of ``X`` induced by ``support x names``."""
    support, names = frozenset(support), frozenset(names)
    rel = frozenset((x, a) for x, a in X.relation if x in support and a in names)
    return NamedSet(id or X.id, support, names, rel)


def is_named_subset(Y: NamedSet, X: NamedSet, weak: bool = False) -> bool:
    if not (Y.support <= X.support and Y.reflector <= X.reflector):
        return False
    induced = frozenset((x, a) for x, a in X.relation if x in Y.support and a in Y.reflector)
    return Y.relation <= induced if weak else Y.relation == induced


@dataclass(frozen=True)
class Morphism:
    """A pair of total maps ``f`` (supports) and ``g`` (reflectors).

    Totality is enforced on construction; commutativity of the naming square
    is a property checked by :func:`check_morphism`, so non-commuting pairs
    can still be represented and diagnosed.
    """

    id: Atom = field(compare=False)
    source: NamedSet
    target: NamedSet
    f: Mapping[Atom, Atom]
    g: Mapping[Atom, Atom]

    def __post_init__(self):
        check_atom(self.id)
        object.__setattr__(self, "f", MappingProxyType(dict(self.f)))
        object.__setattr__(self, "g", MappingProxyType(dict(self.g)))
        _check_total(self)

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.f.items()), frozenset(self.g.items())))

    def __repr__(self):
        return f"Morphism({self.id!r}: {self.source.id} -> {self.target.id})"


def _check_total(F: Morphism) -> None:
    for label, m, dom, cod in (
        ("f", F.f, F.source.support, F.target.support),
        ("g", F.g, F.source.reflector, F.target.reflector),
    ):
        if set(m) != dom:
            missing = sorted(dom - set(m))
            extra = sorted(set(m) - dom)
            raise PartialMap(f"{F.id}: {label} must be defined on exactly its domain "
                             f"(missing {missing}, extra {extra})")
        bad = sorted(k for k, v in m.items() if v not in cod)
        if bad:
            raise PartialMap(f"{F.id}: {label} maps {bad[0]!r} outside its codomain")


def make_morphism(id: Atom, source: NamedSet, target: NamedSet,
                  f: Mapping[Atom, Atom], g: Mapping[Atom, Atom]) -> Morphism:
    return Morphism(id, source, target, f, g)


def naming_square(F: Morphism) -> tuple[frozenset[Pair], frozenset[Pair]]:
    """Both paths around the naming square, as relations from source support
    to target reflector: ``f`` then the target naming, and the source naming
    then ``g``."""
    q = F.target.relation
    f_then_q = frozenset((x, b) for x in F.source.support for y, b in q if y == F.f[x])
    r_then_g = frozenset((x, F.g[a]) for x, a in F.source.relation)
    return f_then_q, r_then_g


@dataclass(frozen=True)
class MorphismCheck:
    ok: bool
    witness: Pair | None = None

    def __bool__(self):
        return self.ok


def check_morphism(F: Morphism) -> MorphismCheck:
    _check_total(F)
    fq, rg = naming_square(F)
    if fq == rg:
        return MorphismCheck(True)
    only_fq = sorted(fq - rg)
    witness = only_fq[0] if only_fq else sorted(rg - fq)[0]
    return MorphismCheck(False, witness)


def _same_object(A: NamedSet, B: NamedSet) -> bool:
    return A.id == B.id and A == B


def compose_morphisms(F: Morphism, G: Morphism, id: Atom | None = None) -> Morphism:
    """Composite ``F`` then ``G`` (written ``FG`` left to right)."""
    if not _same_object(F.target, G.source):
        raise NonComposable(f"{F.id} ends at {F.target.id} but {G.id} starts at {G.source.id}")
    f = {x: G.f[y] for x, y in F.f.items()}
    g = {a: G.g[b] for a, b in F.g.items()}
    return Morphism(id or f"{F.id};{G.id}", F.source, G.target, f, g)


def identity_morphism(X: NamedSet) -> Morphism:
    return Morphism(f"id_{X.id}", X, X, {x: x for x in X.support}, {a: a for a in X.reflector})


@dataclass
class CategoryReport:
    commutes: dict[Atom, bool] = field(default_factory=dict)
    composites: list[tuple[Atom, Atom, bool]] = field(default_factory=list)
    associativity: list[tuple[Atom, Atom, Atom, bool]] = field(default_factory=list)
    identities: list[tuple[Atom, bool, bool]] = field(default_factory=list)

    @property
    def failing_morphisms(self) -> list[Atom]:
        return sorted(k for k, ok in self.commutes.items() if not ok)

    @property
    def ok(self) -> bool:
        return (
            all(self.commutes.values())
            and all(c[-1] for c in self.composites)
            and all(a[-1] for a in self.associativity)
            and all(left and right for _, left, right in self.identities)
        )


def verify_category(objects: Iterable[NamedSet], morphisms: Iterable[Morphism]) -> CategoryReport:
    """Check every category law extensionally over a finite workspace.

    For each morphism: commutativity. For each composable pair: validity of
    the composite. For each composable triple: associativity. For each
    morphism: both identity laws.
    """
    objs = {X.id: X for X in objects}
    morphisms = list(morphisms)
    for F in morphisms:
        for end in (F.source, F.target):
            if end.id not in objs or objs[end.id] != end:
                raise UnknownObject(f"{F.id}: endpoint {end.id} is not a declared object")

    report = CategoryReport()
    for F in morphisms:
        report.commutes[F.id] = check_morphism(F).ok

    outgoing: dict[Atom, list[Morphism]] = {}
    for F in morphisms:
        outgoing.setdefault(F.source.id, []).append(F)

    for F in morphisms:
        for G in outgoing.get(F.target.id, ()):
            report.composites.append((F.id, G.id, check_morphism(compose_morphisms(F, G)).ok))

    for F in morphisms:
        for G in outgoing.get(F.target.id, ()):
            FG = compose_morphisms(F, G)
            for H in outgoing.get(G.target.id, ()):
                left = compose_morphisms(FG, H)
                right = compose_morphisms(F, compose_morphisms(G, H))
                report.associativity.append((F.id, G.id, H.id, left == right))

    for F in morphisms:
        left = compose_morphisms(identity_morphism(F.source), F) == F
        right = compose_morphisms(F, identity_morphism(F.target)) == F
        report.identities.append((F.id, left, right))
    return report


def all_maps(domain: Iterable[Atom], codomain: Iterable[Atom]) -> list[dict[Atom, Atom]]:
    """Every total map from ``domain`` to ``codomain``."""
    dom, cod = sorted(domain), sorted(codomain)
    return [dict(zip(dom, values)) for values in product(cod, repeat=len(dom))]
