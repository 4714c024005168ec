"""Command line front end: one subcommand per operation, run against a
workspace file. Reports are sorted ``key=value`` lines.

Exit status: 0 success or query true, 1 query false, 2 invariant or
runtime error, 3 parse error, 4 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .. import kernel, lattice, properties, structures, views
from ..errors import NamedSetError
from ..numerals import NumeralScale
from ..views import REALLINE, SYMMETRIC, UNIT, Scale
from .parser import load_workspace
from .serializer import render_atom, serialize_workspace
from .workspace import WorkspaceError

OK, FALSE, ERROR, PARSE, USAGE = 0, 1, 2, 3, 4


class Usage(Exception):
    pass


class CommandError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise Usage(f"{self.prog}: {message}")


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (set, frozenset)):
        return " ".join(render_atom(a) for a in sorted(v))
    return str(v)


def report(out, **pairs) -> None:
    for k in sorted(pairs):
        out.write(f"{k}={_fmt(pairs[k])}\n")


def _namedset_report(out, X: kernel.NamedSet) -> None:
    rel = " ".join(f"{render_atom(x)}->{render_atom(a)}" for x, a in sorted(X.relation))
    report(out, id=render_atom(X.id), names=X.reflector, relation=rel, support=X.support)


def _scale_of_base(base: int) -> NumeralScale:
    try:
        return NumeralScale.of_base(base)
    except ValueError as exc:
        raise Usage(str(exc)) from None


def _lookup(ws, id, *kinds):
    try:
        return ws.find(id, *kinds)[1]
    except KeyError as exc:
        raise CommandError(exc.args[0]) from None


def _load(args):
    return load_workspace(args.file)


# ------------------------------------------------------------------ commands

def cmd_validate(args, out):
    ws = _load(args)
    report(out, status="ok", **{k: n for k, n in ws.counts().items()})
    return OK


def cmd_classify(args, out):
    X = _lookup(_load(args), args.id, "namedset")
    report(out, **kernel.classify(X).as_dict())
    return OK


def cmd_names(args, out):
    X = _lookup(_load(args), args.id, "namedset")
    report(out, element=render_atom(args.elem), names=kernel.names_of(X, args.elem))
    return OK


def cmd_subset(args, out):
    ws = _load(args)
    Y, X = _lookup(ws, args.y, "namedset"), _lookup(ws, args.x, "namedset")
    result = kernel.is_named_subset(Y, X, weak=args.weak)
    report(out, mode="weak" if args.weak else "strict", result=result)
    return OK if result else FALSE


def cmd_check_morphism(args, out):
    F = _lookup(_load(args), args.f, "morphism")
    check = kernel.check_morphism(F)
    pairs = {"result": check.ok}
    if check.witness:
        pairs["witness"] = "->".join(render_atom(a) for a in check.witness)
    report(out, **pairs)
    return OK if check.ok else FALSE


def _maps(m) -> str:
    return " ".join(f"{render_atom(k)}->{render_atom(v)}" for k, v in sorted(m.items()))


def cmd_compose(args, out):
    ws = _load(args)
    F, G = _lookup(ws, args.f, "morphism"), _lookup(ws, args.g, "morphism")
    FG = kernel.compose_morphisms(F, G)
    report(out, f=_maps(FG.f), g=_maps(FG.g), id=render_atom(FG.id), source=render_atom(FG.source.id),
           target=render_atom(FG.target.id), valid=kernel.check_morphism(FG).ok)
    return OK


def cmd_category_check(args, out):
    ws = _load(args)
    rep = kernel.verify_category(ws.namedsets.values(), ws.morphisms.values())

    def tally(rows):
        return f"{sum(1 for r in rows if r)}/{len(rows)}"

    report(
        out,
        associativity=tally([a[-1] for a in rep.associativity]),
        composites=tally([c[-1] for c in rep.composites]),
        failing=set(rep.failing_morphisms),
        identities=tally([left and right for _, left, right in rep.identities]),
        morphisms=tally(list(rep.commutes.values())),
        result=rep.ok,
    )
    return OK if rep.ok else FALSE


def cmd_embed(args, out):
    S = _lookup(_load(args), args.set, "set")
    _namedset_report(out, views.embed_set(S, args.name))
    return OK


def cmd_as_multiset(args, out):
    X = _lookup(_load(args), args.id, "namedset")
    M = views.named_set_as_multiset(X, _scale_of_base(args.base))
    report(out, id=render_atom(M.name),
           items=" ".join(f"{render_atom(e)}:{k}" for e, k in sorted(M.multiplicity.items())))
    return OK


def _scale(ws, text) -> Scale:
    named = {"unit": UNIT, "sym": SYMMETRIC, "real": REALLINE}
    if text in named:
        return named[text]
    kind, _, lat = text.partition(":")
    if kind != "lattice" or not lat:
        raise Usage(f"unknown scale {text!r}; use unit, sym, real or lattice:L")
    return Scale.of_lattice(_lookup(ws, lat, "lattice"))


def cmd_as_fuzzy(args, out):
    ws = _load(args)
    X = _lookup(ws, args.id, "namedset")
    F = views.named_set_as_fuzzy(X, _scale(ws, args.scale))
    members = " ".join(f"{render_atom(u)}:{views.render_degree(d)}" for u, d in sorted(F.membership.items()))
    report(out, id=render_atom(F.id), members=members, scale=F.scale.label)
    return OK


def cmd_to_namedset(args, out):
    ws = _load(args)
    try:
        kind, obj = ws.find(args.id, "set", "multiset", "fuzzy", "property", "calculus")
    except KeyError as exc:
        raise CommandError(exc.args[0]) from None
    if kind == "set":
        X = views.embed_set(obj, obj.name)
    elif kind == "multiset":
        X = views.multiset_as_named_set(obj, _scale_of_base(args.base))
    elif kind == "fuzzy":
        X = views.fuzzy_as_named_set(obj)
    elif kind == "property":
        X = properties.property_as_named_set(obj)
    else:
        X = structures.deduction_named_set(obj, args.depth)
    _namedset_report(out, X)
    return OK


def cmd_tokenize(args, out):
    M = _lookup(_load(args), args.id, "multiset")
    _namedset_report(out, views.tokenize(M))
    return OK


def cmd_lattice_check(args, out):
    L = _lookup(_load(args), args.l, "lattice")
    rep = lattice.validate_lattice(L)
    if rep:
        report(out, bottom=render_atom(lattice.bottom(L)), top=render_atom(lattice.top(L)), valid=True)
        return OK
    pairs = {"valid": False, "reason": rep.reason.replace(" ", "-")}
    if rep.pair:
        pairs["pair"] = " ".join(render_atom(a) for a in rep.pair)
    report(out, **pairs)
    return FALSE


def _join_or_meet(which):
    def cmd(args, out):
        L = _lookup(_load(args), args.l, "lattice")
        rep = lattice.validate_lattice(L)
        if not rep:
            raise CommandError(f"{L.id} is not a lattice: {rep.reason}")
        j, m = lattice.lattice_join_meet(L, args.a, args.b)
        report(out, **{which: render_atom(j if which == "join" else m)})
        return OK
    return cmd


def cmd_count(args, out):
    kind, obj = _lookup_kind(_load(args), args.id, "set", "multiset")
    scale = _scale_of_base(args.base)
    n = properties.count_set(obj, scale) if kind == "set" else properties.count_multiset(obj, scale)
    report(out, base=scale.base, count=n)
    return OK


def _lookup_kind(ws, id, *kinds):
    try:
        return ws.find(id, *kinds)
    except KeyError as exc:
        raise CommandError(exc.args[0]) from None


def cmd_succ(args, out):
    scale = _scale_of_base(args.base)
    report(out, base=scale.base, succ=properties.successor_numeral(args.numeral, scale))
    return OK


def cmd_apply_property(args, out):
    P = _lookup(_load(args), args.p, "property")
    value = properties.apply_property(P, args.u)
    defined = value is not properties.UNDEFINED
    report(out, defined=defined, value=render_atom(value) if defined else "UNDEFINED")
    return OK


def cmd_deduce(args, out):
    C = _lookup(_load(args), args.c, "calculus")
    theorems = structures.deduce(C, args.depth)
    report(out, count=len(theorems), depth=args.depth, theorems=theorems)
    return OK


def cmd_deduction_set(args, out):
    C = _lookup(_load(args), args.c, "calculus")
    _namedset_report(out, structures.deduction_named_set(C, args.depth))
    return OK


def cmd_run_automaton(args, out):
    A = _lookup(_load(args), args.a, "automaton")
    run = structures.run_automaton(A, args.word)
    report(out, accepted=run.accepted, end=render_atom(run.end), output=structures.render_word(run.output))
    return OK


def cmd_derive(args, out):
    G = _lookup(_load(args), args.g, "grammar")
    d = structures.derive_grammar(G, args.word, args.max_steps, args.max_len)
    if d is structures.NOT_FOUND_WITHIN_BOUNDS:
        report(out, found=False, result="NotFoundWithinBounds")
        return FALSE
    forms = " => ".join(structures.render_word(f, empty="ε") for f in d)
    report(out, derivation=forms, found=True, steps=len(d) - 1)
    return OK


def cmd_run_tm(args, out):
    T = _lookup(_load(args), args.t, "tm")
    run = structures.run_tm(T, args.word, args.max_steps)
    report(out, halted=run.halted, steps=run.steps, tape=structures.render_word(run.tape))
    return OK


def cmd_decompose(args, out):
    obj = _lookup(_load(args), args.id, "tm", "automaton", "grammar", "calculus")
    out.write(structures.decompose(obj).render() + "\n")
    return OK


def cmd_rule_as_namedset(args, out):
    obj = _lookup(_load(args), args.id, "tm", "grammar", "calculus")
    rules = structures.rules_of(obj)
    if not 0 <= args.index < len(rules):
        raise CommandError(f"{args.id} has {len(rules)} rules; index {args.index} is out of range")
    _namedset_report(out, structures.rule_as_named_set(rules[args.index], id=f"{args.id}.{args.index}"))
    return OK


def cmd_fmt(args, out):
    text = serialize_workspace(_load(args))
    if args.in_place:
        with open(args.file, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="namedsets", description="Finite named sets and the structures built from them.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, fn, *positional, help=None):
        sp = sub.add_parser(name, help=help)
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "file", help="parse and validate a workspace")
    add("classify", cmd_classify, "file", "id")
    add("names", cmd_names, "file", "id", "elem")
    add("subset", cmd_subset, "file", "y", "x").add_argument("--weak", action="store_true")
    add("check-morphism", cmd_check_morphism, "file", "f")
    add("compose", cmd_compose, "file", "f", "g")
    add("category-check", cmd_category_check, "file")
    add("embed", cmd_embed, "file", "set", "name")
    add("as-multiset", cmd_as_multiset, "file", "id").add_argument("--base", type=int, default=10)
    add("as-fuzzy", cmd_as_fuzzy, "file", "id").add_argument("--scale", required=True)
    sp = add("to-namedset", cmd_to_namedset, "file", "id")
    sp.add_argument("--base", type=int, default=10)
    sp.add_argument("--depth", type=int, default=0)
    add("tokenize", cmd_tokenize, "file", "id")
    add("lattice-check", cmd_lattice_check, "file", "l")
    add("join", _join_or_meet("join"), "file", "l", "a", "b")
    add("meet", _join_or_meet("meet"), "file", "l", "a", "b")
    add("count", cmd_count, "file", "id").add_argument("--base", type=int, choices=(2, 10), default=10)
    add("succ", cmd_succ, "numeral").add_argument("--base", type=int, choices=(2, 10), default=10)
    add("apply-property", cmd_apply_property, "file", "p", "u")
    add("deduce", cmd_deduce, "file", "c").add_argument("--depth", type=int, required=True)
    add("deduction-set", cmd_deduction_set, "file", "c").add_argument("--depth", type=int, required=True)
    add("run-automaton", cmd_run_automaton, "file", "a", "word")
    sp = add("derive", cmd_derive, "file", "g", "word")
    sp.add_argument("--max-steps", type=int, required=True)
    sp.add_argument("--max-len", type=int, required=True)
    add("run-tm", cmd_run_tm, "file", "t", "word").add_argument("--max-steps", type=int, required=True)
    add("decompose", cmd_decompose, "file", "id")
    sp = add("rule-as-namedset", cmd_rule_as_namedset, "file", "id")
    sp.add_argument("index", type=int)
    add("fmt", cmd_fmt, "file").add_argument("--in-place", action="store_true")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        for name in ("depth", "max_steps", "max_len"):
            if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
                raise Usage(f"--{name.replace('_', '-')} must be nonnegative")
        return args.func(args, out)
    except Usage as exc:
        err.write(f"usage error: {exc}\n")
        return USAGE
    except WorkspaceError as exc:
        path = getattr(args, "file", "")
        for d in exc.diagnostics:
            err.write(f"{path}:{d}\n")
        return PARSE if exc.exit_code == PARSE else ERROR
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return ERROR
    except (NamedSetError, CommandError) as exc:
        err.write(f"error: {exc}\n")
        return ERROR
