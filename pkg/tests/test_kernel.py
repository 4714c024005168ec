import pytest
from hypothesis import given, settings, strategies as st

from namedsets import (
    DanglingPair,
    NonComposable,
    PartialMap,
    UnknownElement,
    UnknownObject,
    check_morphism,
    classify,
    compose_morphisms,
    factual_names,
    identity_morphism,
    is_named_subset,
    make_morphism,
    make_named_set,
    names_of,
    verify_category,
)
from namedsets.kernel import all_maps, restrict

import oracles


def ns(id, support, names, rel):
    return make_named_set(id, support, names, rel)


X_ab = ns("X", "ab", "n", [("a", "n"), ("b", "n")])


# -- construction -----------------------------------------------------------

def test_make_named_set_valid():
    assert X_ab.support == {"a", "b"}
    assert X_ab.relation == {("a", "n"), ("b", "n")}


def test_empty_named_set():
    E = ns("E", [], [], [])
    assert not E.support and not E.reflector and not E.relation


def test_dangling_pair():
    with pytest.raises(DanglingPair):
        ns("X", "a", "n", [("b", "n")])
    with pytest.raises(DanglingPair):
        ns("X", "a", "n", [("a", "m")])


def test_equality_ignores_id():
    assert ns("A", "a", "n", [("a", "n")]) == ns("B", "a", "n", [("a", "n")])
    assert ns("A", "a", "n", [("a", "n")]) != ns("A", "a", "n", [])


@pytest.mark.parametrize("bad", ["", "tab\there", 3])
def test_atoms_must_be_printable_strings(bad):
    with pytest.raises(ValueError):
        ns("X", [bad], [], [])


# -- factual names and complete names ------------------------------------------

def test_factual_names():
    assert factual_names(ns("X", "a", "pq", [("a", "p")])) == {"p"}
    assert factual_names(ns("X", "a", "pq", [])) == set()


def test_factual_names_against_scan():
    X = ns("X", "ab", "pq", [("a", "p"), ("b", "q")])
    scanned = {a for a in X.reflector for x in X.support if (x, a) in X.relation}
    assert factual_names(X) == scanned == {"p", "q"}


def test_names_of():
    X = ns("X", "ab", "pq", [("a", "p"), ("a", "q")])
    assert names_of(X, "a") == {"p", "q"}
    assert names_of(X, "b") == set()
    with pytest.raises(UnknownElement):
        names_of(X, "c")


# -- classification -------------------------------------------------------------

def test_classify_singlenamed():
    c = classify(X_ab)
    assert c.singlenamed and c.normalized and c.functional and c.total
    assert not c.individually_named


def test_classify_individually_named():
    c = classify(ns("X", "ab", "12", [("a", "1"), ("b", "2")]))
    assert c.individually_named and c.functional and c.total and c.normalized


def test_classify_not_normalized():
    c = classify(ns("X", "a", "12", [("a", "1")]))
    assert not c.normalized
    assert not c.individually_named  # bijection must reach the whole reflector


def test_classify_multivalued_and_partial():
    c = classify(ns("X", "abc", "pq", [("a", "p"), ("a", "q"), ("b", "q")]))
    assert not c.functional and not c.total and c.normalized and not c.singlenamed


def test_empty_named_set_classification():
    c = classify(ns("E", [], [], []))
    assert c.functional and c.total and c.normalized and not c.singlenamed
    assert c.individually_named  # empty bijection


# -- subsets --------------------------------------------------------------------

X3 = ns("X", "abc", "mn", [("a", "n"), ("b", "n"), ("c", "m")])


def test_restriction_is_strict_subset():
    Y = restrict(X3, "a", "n", id="Y")
    assert Y.relation == {("a", "n")}
    assert is_named_subset(Y, X3)
    assert is_named_subset(Y, X3, weak=True)


def test_weak_but_not_strict():
    Y = ns("Y", "ab", "n", [("a", "n")])
    induced = {(x, a) for (x, a) in X3.relation if x in Y.support and a in Y.reflector}
    assert induced == {("a", "n"), ("b", "n")}
    assert is_named_subset(Y, X3, weak=True)
    assert not is_named_subset(Y, X3)


def test_foreign_pair_is_no_subset():
    Y = ns("Y", "a", "m", [("a", "m")])
    assert not is_named_subset(Y, X3)
    assert not is_named_subset(Y, X3, weak=True)


def test_containment_required():
    Y = ns("Y", "az", "n", [("a", "n")])
    assert not is_named_subset(Y, X3, weak=True)


# -- morphisms ----------------------------------------------------------------------

X1 = ns("X", "x", "i", [("x", "i")])
Y1 = ns("Y", "y", ["j", "j2"], [("y", "j")])


def test_commuting_square():
    F = make_morphism("F", X1, Y1, {"x": "y"}, {"i": "j"})
    assert check_morphism(F).ok


def test_non_commuting_square_witness():
    F = make_morphism("F", X1, Y1, {"x": "y"}, {"i": "j2"})
    fq, rg = oracles.square_paths(X1.support, X1.relation, Y1.reflector, Y1.relation, F.f, F.g)
    assert fq == {("x", "j")} and rg == {("x", "j2")}
    result = check_morphism(F)
    assert not result.ok
    assert result.witness == ("x", "j")


def test_partial_map_rejected():
    with pytest.raises(PartialMap):
        make_morphism("F", X_ab, X_ab, {"a": "a"}, {"n": "n"})
    with pytest.raises(PartialMap):
        make_morphism("F", X_ab, X_ab, {"a": "a", "b": "zz"}, {"n": "n"})


def test_identity_passes_and_is_idempotent():
    for X in (X_ab, X3, ns("E", [], [], [])):
        I = identity_morphism(X)
        assert check_morphism(I)
        assert compose_morphisms(I, I) == I


def test_identity_of_empty_has_empty_maps():
    I = identity_morphism(ns("E", [], [], []))
    assert dict(I.f) == {} and dict(I.g) == {}


def test_identity_law():
    F = make_morphism("F", X1, Y1, {"x": "y"}, {"i": "j"})
    assert compose_morphisms(identity_morphism(X1), F) == F
    assert compose_morphisms(F, identity_morphism(Y1)) == F


def test_non_composable():
    F = make_morphism("F", X1, Y1, {"x": "y"}, {"i": "j"})
    Y_other = ns("Y2", "y", ["j", "j2"], [("y", "j")])
    G = make_morphism("G", Y_other, X1, {"y": "x"}, {"j": "i", "j2": "i"})
    with pytest.raises(NonComposable):
        compose_morphisms(F, G)


def _three_object_workspace():
    A = ns("A", ["a1", "a2"], "s", [("a1", "s"), ("a2", "s")])
    B = ns("B", ["b1", "b2"], "t", [("b1", "t"), ("b2", "t")])
    C = ns("C", ["c1"], "u", [("c1", "u")])
    objs = [A, B, C]
    morphisms = []
    for X in objs:
        for Y in objs:
            for k, (f, g) in enumerate((f, g) for f in all_maps(X.support, Y.support)
                                       for g in all_maps(X.reflector, Y.reflector)):
                morphisms.append(make_morphism(f"{X.id}{Y.id}{k}", X, Y, f, g))
    return objs, morphisms


def test_associativity_brute_force_triples():
    objs, morphisms = _three_object_workspace()
    checked = 0
    for F in morphisms:
        for G in morphisms:
            if G.source.id != F.target.id:
                continue
            for H in morphisms:
                if H.source.id != G.target.id:
                    continue
                left = compose_morphisms(compose_morphisms(F, G), H)
                right = compose_morphisms(F, compose_morphisms(G, H))
                # componentwise comparison
                assert dict(left.f) == {x: H.f[G.f[F.f[x]]] for x in F.source.support}
                assert dict(left.f) == dict(right.f) and dict(left.g) == dict(right.g)
                checked += 1
    assert checked > 100


# -- category verification --------------------------------------------------------------

def test_single_object_identity_only():
    rep = verify_category([X_ab], [identity_morphism(X_ab)])
    assert rep.ok
    assert rep.associativity == [("id_X", "id_X", "id_X", True)]


def test_all_maps_between_two_singlenamed_sets():
    A = ns("A", ["a1", "a2"], "s", [("a1", "s"), ("a2", "s")])
    B = ns("B", ["b1", "b2"], "t", [("b1", "t"), ("b2", "t")])
    # every set map lifts: all of A's elements share one name, as do B's
    morphisms = [make_morphism(f"m{i}", A, B, f, {"s": "t"})
                 for i, f in enumerate(all_maps(A.support, B.support))]
    back = [make_morphism(f"n{i}", B, A, f, {"t": "s"})
            for i, f in enumerate(all_maps(B.support, A.support))]
    assert len(morphisms) == 4 and len(back) == 4
    rep = verify_category([A, B], morphisms + back)
    # 4 x 4 x 4 alternating triples starting at A plus the same starting at B
    assert len(rep.associativity) == 2 * 64
    assert rep.ok


def test_mutated_morphism_flagged_exactly():
    X = ns("X", ["x1", "x2"], "pq", [("x1", "p"), ("x2", "q")])
    Y = ns("Y", ["y1", "y2"], "uv", [("y1", "u"), ("y2", "v")])
    good = make_morphism("good", X, Y, {"x1": "y1", "x2": "y2"}, {"p": "u", "q": "v"})
    bad = make_morphism("bad", X, Y, {"x1": "y1", "x2": "y2"}, {"p": "v", "q": "u"})
    assert oracles.commutes(X, Y, good.f, good.g)
    assert not oracles.commutes(X, Y, bad.f, bad.g)
    rep = verify_category([X, Y], [good, bad])
    assert rep.failing_morphisms == ["bad"]
    assert not rep.ok


def test_unknown_object():
    F = make_morphism("F", X1, Y1, {"x": "y"}, {"i": "j"})
    with pytest.raises(UnknownObject):
        verify_category([X1], [F])


# -- properties --------------------------------------------------------------------

ATOMS = st.sampled_from(["a", "b", "c", "d"])
NAMES = st.sampled_from(["n", "m", "p", "q"])


@st.composite
def named_sets(draw, id="X"):
    support = draw(st.frozensets(ATOMS, max_size=4))
    names = draw(st.frozensets(NAMES, max_size=4))
    pairs = [(x, a) for x in sorted(support) for a in sorted(names)]
    rel = draw(st.frozensets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else frozenset()
    return ns(id, support, names, rel)


@given(named_sets())
def test_factual_names_within_reflector(X):
    assert factual_names(X) <= X.reflector


@given(named_sets())
def test_self_subset(X):
    assert is_named_subset(X, X)
    assert is_named_subset(X, X, weak=True)


@given(named_sets(), named_sets(id="Y"))
def test_strict_implies_weak(X, Y):
    if is_named_subset(Y, X):
        assert is_named_subset(Y, X, weak=True)


@given(named_sets())
def test_classification_consistency(X):
    c = classify(X)
    if c.individually_named:
        assert c.functional and c.total and c.normalized
    if c.singlenamed and c.normalized:
        assert len(X.reflector) == 1


@st.composite
def composable_pairs(draw):
    X, Y, Z = draw(named_sets("X")), draw(named_sets("Y")), draw(named_sets("Z"))

    def valid(src, tgt, tag):
        out = []
        for f in all_maps(src.support, tgt.support)[:30]:
            for g in all_maps(src.reflector, tgt.reflector)[:30]:
                if oracles.commutes(src, tgt, f, g):
                    out.append(make_morphism(tag, src, tgt, f, g))
        return out

    Fs, Gs = valid(X, Y, "F"), valid(Y, Z, "G")
    if not Fs or not Gs:
        return None
    return draw(st.sampled_from(Fs)), draw(st.sampled_from(Gs))


@settings(max_examples=60, deadline=None)
@given(composable_pairs())
def test_composite_of_valid_morphisms_is_valid(pair):
    if pair is None:
        return
    F, G = pair
    FG = compose_morphisms(F, G)
    assert check_morphism(FG).ok
    assert oracles.commutes(FG.source, FG.target, FG.f, FG.g)
