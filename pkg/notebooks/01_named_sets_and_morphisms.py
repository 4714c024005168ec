"""
Named sets and their morphisms
==============================

A named set is a support, a set of names (the reflector), and a naming
relation between them. This walk-through builds a few, classifies them and
checks the category laws on a small workspace.
"""

from namedsets import (
    check_morphism,
    classify,
    compose_morphisms,
    factual_names,
    is_named_subset,
    make_morphism,
    make_named_set,
    names_of,
    verify_category,
)

# two elements that share one name: an ordinary set in disguise
X = make_named_set("X", ["a", "b"], ["n"], [("a", "n"), ("b", "n")])
print(classify(X).as_dict())

# an element may carry several names, and some names may go unused
Y = make_named_set("Y", ["a", "b"], ["p", "q", "r"], [("a", "p"), ("a", "q")])
print(sorted(names_of(Y, "a")), sorted(names_of(Y, "b")))
print(sorted(factual_names(Y)), "of", sorted(Y.reflector))
print(classify(Y).as_dict())

# restricting the relation gives a named subset
Z = make_named_set("Z", ["a"], ["p"], [("a", "p")])
print("Z inside Y:", is_named_subset(Z, Y))

# a morphism is a pair of maps that makes the naming square commute
S = make_named_set("S", ["s1", "s2"], ["u", "v"], [("s1", "u"), ("s2", "v")])
T = make_named_set("T", ["t"], ["w"], [("t", "w")])
F = make_morphism("F", S, T, {"s1": "t", "s2": "t"}, {"u": "w", "v": "w"})
print("F commutes:", bool(check_morphism(F)))

# swap the names and the square breaks; the witness is the first offending pair
U = make_named_set("U", ["y1", "y2"], ["u", "v"], [("y1", "u"), ("y2", "v")])
bad = make_morphism("bad", S, U, {"s1": "y1", "s2": "y2"}, {"u": "v", "v": "u"})
print("bad:", check_morphism(bad))

G = make_morphism("G", U, T, {"y1": "t", "y2": "t"}, {"u": "w", "v": "w"})
good = make_morphism("good", S, U, {"s1": "y1", "s2": "y2"}, {"u": "u", "v": "v"})
FG = compose_morphisms(good, G)
print(FG.id, dict(FG.f), dict(FG.g), bool(check_morphism(FG)))

report = verify_category([S, T, U], [good, G])
print("category laws hold:", report.ok)
print("with the bad morphism:", verify_category([S, T, U], [good, G, bad]).failing_morphisms)
