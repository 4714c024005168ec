"""Finite named sets (fundamental triads) and the structures built from them."""

from .errors import *  # noqa: F401,F403
from .kernel import (
    Classification,
    Morphism,
    MorphismCheck,
    NamedSet,
    CategoryReport,
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
from .lattice import FiniteLattice, lattice_join_meet, validate_lattice
from .numerals import BINARY, DECIMAL, NumeralScale
from .properties import (
    UNDEFINED,
    Property,
    apply_property,
    count_multiset,
    count_set,
    natural_number_property,
    successor_numeral,
)
from .structures import (
    NOT_FOUND_WITHIN_BOUNDS,
    Calculus,
    GroundRule,
    Grammar,
    MealyAutomaton,
    Production,
    TMRule,
    TriadTree,
    TuringMachine,
    Valuation,
    check_deterministic,
    decompose,
    deduce,
    deduction_named_set,
    derive_grammar,
    rule_as_named_set,
    run_automaton,
    run_tm,
    validate_valuation,
)
from .views import (
    REALLINE,
    SYMMETRIC,
    UNIT,
    FuzzySet,
    Multiset,
    PlainSet,
    Scale,
    embed_set,
    fuzzy_as_named_set,
    is_function,
    multiplicity_from_tokens,
    multiset_as_named_set,
    named_set_as_fuzzy,
    named_set_as_multiset,
    project_set,
    tokenize,
)

__version__ = "0.1.0"
