"""Abstract properties ``(universe, valuation, scale)`` and counting.

The natural-number property assigns to every finite set the numeral of
its cardinality in a chosen numeral scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DuplicateId
from .kernel import Atom, NamedSet, check_atom
from .numerals import NumeralScale
from .views import Multiset, PlainSet


class _Undefined:
    """Outcome of a property on an object outside its domain."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False


UNDEFINED = _Undefined()


@dataclass(frozen=True)
class Property:
    id: Atom
    universe_label: Atom
    valuation: Mapping[Atom, Atom]
    scale_label: Atom

    def __post_init__(self):
        for a in (self.id, self.universe_label, self.scale_label):
            check_atom(a)
        v = {check_atom(u): check_atom(x) for u, x in dict(self.valuation).items()}
        object.__setattr__(self, "valuation", MappingProxyType(v))

    def __hash__(self):
        return hash((self.id, self.universe_label, self.scale_label, frozenset(self.valuation.items())))

    def __call__(self, u: Atom):
        return apply_property(self, u)


def apply_property(P: Property, u: Atom):
    """Value of ``P`` at ``u``, or :data:`UNDEFINED`. Never raises."""
    return P.valuation.get(u, UNDEFINED)


def property_as_named_set(P: Property) -> NamedSet:
    rel = frozenset(P.valuation.items())
    return NamedSet(P.id, frozenset(P.valuation), frozenset(P.valuation.values()), rel)


def count_set(S: PlainSet, scale: NumeralScale) -> Atom:
    return scale.render(len(S.elements))


def count_multiset(M: Multiset, scale: NumeralScale) -> Atom:
    """Numeral of the number of tokens (sum of multiplicities)."""
    return scale.render(sum(M.multiplicity.values()))


def successor_numeral(n: Atom, scale: NumeralScale) -> Atom:
    """``n + 1`` computed digit by digit with carry."""
    scale.check(n)
    digits = list(n)
    top = scale.digits[-1]
    i = len(digits) - 1
    while i >= 0 and digits[i] == top:
        digits[i] = scale.zero
        i -= 1
    if i < 0:
        return scale.digits[1] + "".join(digits)
    digits[i] = scale.digits[scale.digits.index(digits[i]) + 1]
    return "".join(digits)


def natural_number_property(sets: Iterable[PlainSet], scale: NumeralScale,
                            id: Atom = "eta", universe_label: Atom = "W") -> Property:
    valuation: dict[Atom, Atom] = {}
    for S in sets:
        if S.name in valuation:
            raise DuplicateId(f"set id {S.name!r} occurs twice")
        valuation[S.name] = count_set(S, scale)
    return Property(id, universe_label, valuation, f"N{scale.base}")
