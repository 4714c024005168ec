"""
Calculi, automata, grammars and Turing machines
===============================================

Each structure is a triad of triads. We run them and then print the
decomposition trees.
"""

from namedsets import (
    NOT_FOUND_WITHIN_BOUNDS,
    Calculus,
    Grammar,
    MealyAutomaton,
    Production,
    TMRule,
    TuringMachine,
    check_deterministic,
    classify,
    decompose,
    deduce,
    deduction_named_set,
    derive_grammar,
    rule_as_named_set,
    run_automaton,
    run_tm,
)
from namedsets.structures import render_word, rule

# a ground calculus; deduce(C, k) holds the theorems of depth at most k
C = Calculus("K", frozenset({"p", "q"}), (rule(["p", "q"], "r"), rule("r", "s")))
for k in range(3):
    print(k, sorted(deduce(C, k)))
# theorems named by the axioms used to derive them
print(sorted(deduction_named_set(C, 2).relation))

# Mealy automaton tracking the parity of 1s
par = MealyAutomaton(
    "Par", frozenset("01"), frozenset({"e", "o"}), frozenset({"E", "O"}), "e", frozenset({"e"}),
    {("0", "e"): ("e", "E"), ("1", "e"): ("o", "O"), ("0", "o"): ("o", "O"), ("1", "o"): ("e", "E")},
)
run = run_automaton(par, "1101")
print("".join(run.output), run.end, run.accepted)

# a^n b^n, found by breadth-first search over sentential forms
G = Grammar("G", frozenset("S"), frozenset("ab"), "S",
            (Production(("S",), ("a", "S", "b")), Production(("S",), ())))
d = derive_grammar(G, "aaabbb", 10, 10)
print(" => ".join(render_word(f, empty="ε") for f in d))
print(derive_grammar(G, "aab", 10, 10) is NOT_FOUND_WITHIN_BOUNDS)

# unary successor
succ = TuringMachine("Succ", frozenset("1_"), "_", frozenset({"q0", "qh"}), "q0", frozenset({"qh"}),
                     (TMRule("q0", "1", "R", "q0"), TMRule("q0", "_", "1", "qh")))
print(check_deterministic(succ).ok, run_tm(succ, "1111", 100))

# a rule is itself a small named set
print(classify(rule_as_named_set(succ.rules[0])).individually_named)

for structure in (succ, par, G, C):
    print(decompose(structure).render())
    print()
