"""Finite lattices given by generating order pairs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidLattice, UnknownElement
from .kernel import Atom, Pair, check_atom


def reflexive_transitive_closure(carrier: frozenset[Atom], pairs: Iterable[Pair]) -> frozenset[Pair]:
    above: dict[Atom, set[Atom]] = {a: {a} for a in carrier}
    for a, b in pairs:
        above[a].add(b)
    # repeated relaxation; carriers are small
    changed = True
    while changed:
        changed = False
        for a in carrier:
            reach = set(above[a])
            for b in above[a]:
                reach |= above[b]
            if reach != above[a]:
                above[a] = reach
                changed = True
    return frozenset((a, b) for a in carrier for b in above[a])


@dataclass(frozen=True)
class FiniteLattice:
    """A finite poset candidate; ``order`` is the closure of ``generators``.

    Construction only closes the order. Whether the result really is a
    lattice is reported by :func:`validate_lattice`.
    """

    id: Atom
    carrier: frozenset[Atom]
    generators: frozenset[Pair] = field(default=frozenset(), compare=False)
    order: frozenset[Pair] = field(init=False)

    def __post_init__(self):
        check_atom(self.id)
        carrier = frozenset(check_atom(a) for a in self.carrier)
        gens = frozenset((a, b) for a, b in self.generators)
        for a, b in sorted(gens):
            for x in (a, b):
                if x not in carrier:
                    raise UnknownElement(f"{self.id}: order pair {a}<={b} uses {x!r} outside the carrier")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "order", reflexive_transitive_closure(carrier, gens))

    def leq(self, a: Atom, b: Atom) -> bool:
        return (a, b) in self.order

    def covers(self) -> frozenset[Pair]:
        """Hasse diagram: strict pairs with nothing strictly between."""
        strict = {(a, b) for a, b in self.order if a != b}
        return frozenset(
            (a, b) for a, b in strict
            if not any((a, c) in strict and (c, b) in strict for c in self.carrier)
        )


@dataclass(frozen=True)
class LatticeReport:
    valid: bool
    reason: str = ""
    pair: Pair | None = None

    def __bool__(self):
        return self.valid


def _up(L: FiniteLattice, a: Atom) -> frozenset[Atom]:
    return frozenset(b for x, b in L.order if x == a)


def _down(L: FiniteLattice, a: Atom) -> frozenset[Atom]:
    return frozenset(x for x, b in L.order if b == a)


def _lub(L: FiniteLattice, a: Atom, b: Atom) -> Atom | None:
    # z is the join iff its up-set is exactly the common up-set
    common = _up(L, a) & _up(L, b)
    hits = [z for z in common if _up(L, z) == common]
    return hits[0] if len(hits) == 1 else None


def _glb(L: FiniteLattice, a: Atom, b: Atom) -> Atom | None:
    common = _down(L, a) & _down(L, b)
    hits = [z for z in common if _down(L, z) == common]
    return hits[0] if len(hits) == 1 else None


def validate_lattice(L: FiniteLattice) -> LatticeReport:
    carrier = sorted(L.carrier)
    if not carrier:
        return LatticeReport(False, "empty carrier has no top or bottom")
    for a in carrier:
        if not L.leq(a, a):
            return LatticeReport(False, "order is not reflexive", (a, a))
    for a in carrier:
        for b in carrier:
            if a < b and L.leq(a, b) and L.leq(b, a):
                return LatticeReport(False, "order is not antisymmetric", (a, b))
            if L.leq(a, b):
                for c in carrier:
                    if L.leq(b, c) and not L.leq(a, c):
                        return LatticeReport(False, "order is not transitive", (a, c))
    for i, a in enumerate(carrier):
        for b in carrier[i:]:
            if _lub(L, a, b) is None:
                return LatticeReport(False, "no least upper bound", (a, b))
            if _glb(L, a, b) is None:
                return LatticeReport(False, "no greatest lower bound", (a, b))
    if top(L) is None or bottom(L) is None:
        return LatticeReport(False, "missing top or bottom")
    return LatticeReport(True)


def top(L: FiniteLattice) -> Atom | None:
    hits = [z for z in L.carrier if _down(L, z) == L.carrier]
    return hits[0] if len(hits) == 1 else None


def bottom(L: FiniteLattice) -> Atom | None:
    hits = [z for z in L.carrier if _up(L, z) == L.carrier]
    return hits[0] if len(hits) == 1 else None


def lattice_join_meet(L: FiniteLattice, a: Atom, b: Atom) -> tuple[Atom, Atom]:
    for x in (a, b):
        if x not in L.carrier:
            raise UnknownElement(f"{x!r} is not in lattice {L.id}")
    join, meet = _lub(L, a, b), _glb(L, a, b)
    if join is None or meet is None:
        raise InvalidLattice(f"{L.id} has no join or meet for ({a}, {b})")
    return join, meet


def join(L: FiniteLattice, a: Atom, b: Atom) -> Atom:
    return lattice_join_meet(L, a, b)[0]


def meet(L: FiniteLattice, a: Atom, b: Atom) -> Atom:
    return lattice_join_meet(L, a, b)[1]


def chain(id: Atom, elements: Iterable[Atom]) -> FiniteLattice:
    elements = list(elements)
    return FiniteLattice(id, frozenset(elements), frozenset(zip(elements, elements[1:])))


def diamond(id: Atom = "M2") -> FiniteLattice:
    return FiniteLattice(id, frozenset("0xy1"),
                         frozenset({("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")}))
