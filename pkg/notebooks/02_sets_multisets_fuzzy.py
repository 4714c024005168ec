"""
Ordinary sets, multisets and fuzzy sets as named sets
=====================================================

Each classical notion is a named set with a particular shape. We move
back and forth between the two views and check that nothing is lost.
"""

from fractions import Fraction

from namedsets import BINARY, SYMMETRIC, UNIT, DegreeOutOfScale, PlainSet
from namedsets.lattice import diamond, join, meet, validate_lattice, FiniteLattice
from namedsets.views import (
    Multiset,
    Scale,
    embed_set,
    fuzzy_as_named_set,
    fuzzy_set,
    multiplicity_from_tokens,
    multiset_as_named_set,
    named_set_as_fuzzy,
    named_set_as_multiset,
    project_set,
    tokenize,
)
from namedsets import classify

# a plain set gets one name shared by every element
S = PlainSet("S", {"a", "b", "c"})
X = embed_set(S, "S")
print(sorted(X.relation), classify(X).singlenamed)
print(project_set(X) == S)

# multisets: each element is named by its multiplicity numeral
M = Multiset("M", {"a": 2, "b": 3})
Md = multiset_as_named_set(M)
Mb = multiset_as_named_set(M, BINARY)
print(sorted(Md.relation), sorted(Mb.relation))
print(named_set_as_multiset(Mb, BINARY) == M)

# or each copy becomes its own token, all named by the element
T = tokenize(M)
print(sorted(T.support))
print(dict(multiplicity_from_tokens(T).multiplicity))

# fuzzy sets keep exact rational degrees
tall = fuzzy_set("Tall", {"ann": Fraction(1, 2), "bob": Fraction(1), "cy": Fraction(0)})
print(sorted(fuzzy_as_named_set(tall).relation))
opinion = fuzzy_set("Opinion", {"x": Fraction(-1, 3)}, SYMMETRIC)
print(opinion.membership["x"])
try:
    fuzzy_set("Bad", {"x": Fraction(3, 2)}, UNIT)
except DegreeOutOfScale as exc:
    print("rejected:", exc)

# degrees can also live in a finite lattice
M2 = diamond()
print(validate_lattice(M2), join(M2, "x", "y"), meet(M2, "x", "y"))
V = FiniteLattice("V", frozenset("0xy"), frozenset({("0", "x"), ("0", "y")}))
print(validate_lattice(V))

L = Scale.of_lattice(M2)
Lx = named_set_as_fuzzy(fuzzy_as_named_set(fuzzy_set("L", {"a": "x", "b": "1"}, L)), L)
print(dict(Lx.membership))
