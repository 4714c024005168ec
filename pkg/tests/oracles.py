"""Brute-force reference computations.

Nothing here imports the code under test beyond plain data accessors; each
function recomputes its answer by direct enumeration.
"""

from functools import lru_cache, reduce
from itertools import product


# -- naming squares ---------------------------------------------------------

def square_paths(src_support, src_rel, tgt_reflector, tgt_rel, f, g):
    """Enumerate source-support x target-reflector and test membership of
    each candidate pair in both composite relations."""
    fq, rg = set(), set()
    for x, b in product(sorted(src_support), sorted(tgt_reflector)):
        if (f[x], b) in tgt_rel:
            fq.add((x, b))
        if any((x, a) in src_rel and g[a] == b for a in g):
            rg.add((x, b))
    return fq, rg


def commutes(X, Y, f, g):
    fq, rg = square_paths(X.support, X.relation, Y.reflector, Y.relation, f, g)
    return fq == rg


# -- posets and lattices ----------------------------------------------------

def warshall(carrier, pairs):
    elems = sorted(carrier)
    idx = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    m = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        m[idx[a]][idx[b]] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                m[i][j] = m[i][j] or (m[i][k] and m[k][j])
    return {(elems[i], elems[j]) for i in range(n) for j in range(n) if m[i][j]}


def brute_lub(carrier, leq, a, b):
    ub = [z for z in carrier if (a, z) in leq and (b, z) in leq]
    least = [u for u in ub if all((u, v) in leq for v in ub)]
    return least[0] if len(least) == 1 else None


def brute_glb(carrier, leq, a, b):
    lb = [z for z in carrier if (z, a) in leq and (z, b) in leq]
    greatest = [u for u in lb if all((v, u) in leq for v in lb)]
    return greatest[0] if len(greatest) == 1 else None


def is_lattice(carrier, generators):
    leq = warshall(carrier, generators)
    if not carrier:
        return False
    for a, b in product(carrier, repeat=2):
        if a != b and (a, b) in leq and (b, a) in leq:
            return False
    return all(
        brute_lub(carrier, leq, a, b) is not None and brute_glb(carrier, leq, a, b) is not None
        for a, b in product(carrier, repeat=2)
    )


# -- numerals ---------------------------------------------------------------

def to_base(n, base):
    if base == 10:
        return str(n)
    if base == 2:
        return bin(n)[2:]
    raise ValueError(base)


def from_base(s, base):
    return int(s, base)


# -- calculi ----------------------------------------------------------------

def derivable(axioms, rules, depth):
    """Sentences with a derivation tree of height <= depth (recursive)."""
    rules = [(frozenset(p), c) for p, c in rules]
    sentences = set(axioms) | {c for _, c in rules} | {x for p, _ in rules for x in p}

    @lru_cache(maxsize=None)
    def ok(t, k):
        if t in axioms:
            return True
        if k == 0:
            return False
        return any(c == t and all(ok(p, k - 1) for p in prem) for prem, c in rules)

    return {t for t in sentences if ok(t, depth)}


def derivation_trees(axioms, rules, t, depth):
    """Every derivation tree of ``t`` with height <= depth, as nested tuples."""
    trees = []
    if t in axioms:
        trees.append(("axiom", t))
    if depth > 0:
        for prem, c in rules:
            if c != t:
                continue
            prem = sorted(prem)
            subs = [derivation_trees(axioms, rules, p, depth - 1) for p in prem]
            for combo in product(*subs):
                trees.append(("rule", t, combo))
    return trees


def leaves(tree):
    if tree[0] == "axiom":
        return {tree[1]}
    return set().union(*(leaves(s) for s in tree[2]))


# -- machines ---------------------------------------------------------------

def mealy_fold(delta, start, word):
    def step(acc, s):
        q, out = acc
        q2, o = delta[(s, q)]
        return q2, out + [o]

    return reduce(step, word, (start, []))


def trace_tm(rules, blank, start, finals, word, max_steps):
    """Step tracer on a list tape that grows at either end.

    ``rules`` maps (state, symbol) to (action, next) where action is "R",
    "L" or a symbol to write.
    """
    tape = list(word) or [blank]
    head, state, steps = 0, start, 0
    while state not in finals and steps < max_steps:
        key = (state, tape[head])
        if key not in rules:
            return _trim(tape, blank), True, steps
        action, state = rules[key]
        if action == "R":
            head += 1
            if head == len(tape):
                tape.append(blank)
        elif action == "L":
            if head == 0:
                tape.insert(0, blank)
            else:
                head -= 1
        else:
            tape[head] = action
        steps += 1
    return _trim(tape, blank), state in finals, steps


def _trim(tape, blank):
    s = list(tape)
    while s and s[0] == blank:
        s.pop(0)
    while s and s[-1] == blank:
        s.pop()
    return tuple(s)


def one_step(productions, form):
    out = set()
    for lhs, rhs in productions:
        k = len(lhs)
        for i in range(len(form) - k + 1):
            if tuple(form[i:i + k]) == tuple(lhs):
                out.add(tuple(form[:i]) + tuple(rhs) + tuple(form[i + k:]))
    return out


def bfs_distance(productions, start, target, max_steps, max_len):
    """Plain BFS distance from (start,) to target, or None."""
    seen = {(start,)}
    level = {(start,)}
    for d in range(max_steps + 1):
        if tuple(target) in level:
            return d
        nxt = set()
        for form in level:
            for child in one_step(productions, form):
                if len(child) <= max_len and child not in seen:
                    seen.add(child)
                    nxt.add(child)
        level = nxt
    return None


def is_one_rewrite(productions, a, b):
    return tuple(b) in one_step(productions, a)
