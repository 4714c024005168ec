from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from namedsets import (
    BINARY,
    DECIMAL,
    REALLINE,
    SYMMETRIC,
    UNIT,
    BadNumeral,
    DegreeOutOfScale,
    FuzzySet,
    Multiset,
    NotFunctional,
    NotSinglenamed,
    PlainSet,
    Scale,
    TokenClash,
    classify,
    embed_set,
    fuzzy_as_named_set,
    is_function,
    make_named_set,
    multiplicity_from_tokens,
    multiset_as_named_set,
    named_set_as_fuzzy,
    named_set_as_multiset,
    project_set,
    tokenize,
)
from namedsets.lattice import diamond
from namedsets.views import fuzzy_set, render_degree

import oracles


# -- plain sets --------------------------------------------------------------

def test_embed_set():
    X = embed_set(PlainSet("S", {"a", "b"}), "e")
    assert X.support == {"a", "b"}
    assert X.reflector == {"e"}
    assert X.relation == {("a", "e"), ("b", "e")}
    c = classify(X)
    assert c.singlenamed and c.normalized


def test_embed_empty_set_is_not_singlenamed():
    X = embed_set(PlainSet("S", set()), "e")
    assert X.reflector == {"e"} and not X.relation
    assert not classify(X).singlenamed


def test_embed_singleton_individually_named():
    assert classify(embed_set(PlainSet("S", {"a"}), "e")).individually_named


def test_project_set_round_trip():
    S = PlainSet("S", {"a", "b"})
    P = project_set(embed_set(S, "e"))
    assert P == S and P.name == "e"
    assert project_set(embed_set(PlainSet("S", {"a"}), "e")).elements == {"a"}


def test_project_requires_single_name():
    X = make_named_set("X", "ab", "pq", [("a", "p"), ("b", "q")])
    with pytest.raises(NotSinglenamed):
        project_set(X)


# -- functions and correspondences ----------------------------------------------

def test_is_function():
    assert is_function(make_named_set("f", "ab", "12", [("a", "1"), ("b", "2")]))
    assert not is_function(make_named_set("f", "a", "12", [("a", "1"), ("a", "2")]))
    assert not is_function(make_named_set("f", "ab", "1", [("a", "1")]))  # b unmapped


# -- multisets ------------------------------------------------------------------------

M = Multiset("M", {"a": 2, "b": 3})


def test_multiset_decimal():
    X = multiset_as_named_set(M, DECIMAL)
    assert X.relation == {("a", "2"), ("b", "3")}
    assert is_function(X)


def test_multiset_binary_against_base_conversion():
    X = multiset_as_named_set(M, BINARY)
    expected = {(e, oracles.to_base(k, 2)) for e, k in M.multiplicity.items()}
    assert X.relation == expected == {("a", "10"), ("b", "11")}


def test_empty_multiset():
    X = multiset_as_named_set(Multiset("E", {}))
    assert not X.support and not X.reflector and not X.relation


def test_zero_multiplicity_dropped():
    assert dict(Multiset("M", {"a": 0, "b": 1}).multiplicity) == {"b": 1}


def test_named_set_as_multiset():
    assert named_set_as_multiset(multiset_as_named_set(M)) == M
    assert named_set_as_multiset(multiset_as_named_set(M, BINARY), BINARY) == M
    with pytest.raises(BadNumeral):
        named_set_as_multiset(make_named_set("X", "a", ["x7"], [("a", "x7")]))
    with pytest.raises(NotFunctional):
        named_set_as_multiset(make_named_set("X", "a", "12", [("a", "1"), ("a", "2")]))


def test_tokenize():
    T = tokenize(M)
    assert T.support == {"a#1", "a#2", "b#1", "b#2", "b#3"}
    assert T.reflector == {"a", "b"}
    c = classify(T)
    assert c.functional and c.total and c.normalized
    assert tokenize(Multiset("M", {"a": 1})).support == {"a#1"}


def test_tokenize_rejects_separator():
    with pytest.raises(TokenClash):
        tokenize(Multiset("M", {"x#y": 1}))


def test_multiplicity_from_tokens_counts():
    T = tokenize(M)
    counted = {}
    for _, name in T.relation:
        counted[name] = counted.get(name, 0) + 1
    assert multiplicity_from_tokens(T) == Multiset("M", counted) == M


def test_multiplicity_of_embedded_set():
    X = embed_set(PlainSet("S", {"x", "y"}), "e")
    assert dict(multiplicity_from_tokens(X).multiplicity) == {"e": 2}
    assert dict(multiplicity_from_tokens(make_named_set("E", [], [], [])).multiplicity) == {}


multisets = st.dictionaries(st.sampled_from("abcde"), st.integers(1, 9), max_size=5).map(
    lambda d: Multiset("M", d))


@given(multisets)
def test_multiset_round_trips(m):
    for scale in (DECIMAL, BINARY):
        assert named_set_as_multiset(multiset_as_named_set(m, scale), scale) == m
    assert multiplicity_from_tokens(tokenize(m)) == m


# -- scales and fuzzy sets ---------------------------------------------------------------

def test_scale_admission():
    assert UNIT.admits(Fraction(1, 2)) and not UNIT.admits(Fraction(3, 2))
    assert SYMMETRIC.admits(Fraction(-1, 2)) and not SYMMETRIC.admits(Fraction(-3, 2))
    assert REALLINE.admits(Fraction(-7, 2))
    assert not UNIT.admits("x")


def test_degree_canonicalization():
    assert render_degree(Fraction(2, 4)) == "1/2"
    assert render_degree(Fraction(-2, 4)) == "-1/2"
    assert render_degree(Fraction(3)) == "3"


@given(st.fractions(), st.fractions())
def test_degree_rendering_injective(p, q):
    assert (render_degree(p) == render_degree(q)) == (p == q)


def test_fuzzy_unit():
    F = fuzzy_set("F", {"a": Fraction(1, 2)})
    X = fuzzy_as_named_set(F)
    assert X.relation == {("a", "1/2")}
    assert is_function(X)
    assert named_set_as_fuzzy(X, UNIT) == F


def test_fuzzy_lattice():
    L = diamond()
    F = fuzzy_set("F", {"a": "x", "b": "1"}, Scale.of_lattice(L))
    X = fuzzy_as_named_set(F)
    assert X.relation == {("a", "x"), ("b", "1")}
    assert named_set_as_fuzzy(X, F.scale) == F


def test_fuzzy_out_of_scale():
    X = make_named_set("X", "a", ["3/2"], [("a", "3/2")])
    with pytest.raises(DegreeOutOfScale):
        named_set_as_fuzzy(X, UNIT)
    with pytest.raises(DegreeOutOfScale):
        fuzzy_set("F", {"a": Fraction(3, 2)})
    with pytest.raises(DegreeOutOfScale):
        named_set_as_fuzzy(make_named_set("X", "a", ["w"], [("a", "w")]), Scale.of_lattice(diamond()))


def test_fuzzy_symmetric_negative():
    X = make_named_set("X", "a", ["-1/2"], [("a", "-1/2")])
    assert named_set_as_fuzzy(X, SYMMETRIC).membership["a"] == Fraction(-1, 2)
    with pytest.raises(DegreeOutOfScale):
        named_set_as_fuzzy(X, UNIT)


def test_fuzzy_requires_function():
    X = make_named_set("X", "ab", ["1"], [("a", "1")])
    with pytest.raises(NotFunctional):
        named_set_as_fuzzy(X, UNIT)


def test_fuzzy_membership_must_cover_universe():
    with pytest.raises(NotFunctional):
        FuzzySet("F", frozenset("ab"), UNIT, {"a": Fraction(0)})


unit_degrees = st.fractions(min_value=0, max_value=1)


@given(st.dictionaries(st.sampled_from("abcdef"), unit_degrees, max_size=6))
def test_fuzzy_round_trip(members):
    F = fuzzy_set("F", members)
    X = fuzzy_as_named_set(F)
    c = classify(X)
    assert c.functional and c.total
    G = named_set_as_fuzzy(X, UNIT)
    assert G.universe == F.universe
    assert all(G.membership[u] == F.membership[u] for u in F.universe)
