"""Prime monomial algebras and automaton algebras: primitive or PI.

Typical use::

    from automalg import parse_presentation, classify

    report = classify(parse_presentation("letters x y\nforbid x x\nforbid y y"))
    report.verdict          # Verdict.PI
"""

from .algebra import (
    AlgebraElement,
    AlgebraError,
    FirstReturnLanguage,
    GeneratorCount,
    decompose_word,
    element_add,
    element_is_zero,
    element_mul,
    element_scale,
    factor_over_generators,
    first_return_language,
    generator_count,
    ideal_intersection_witness,
    is_q_avoiding,
    leading_support,
    parse_element,
)
from .automaton import (
    AutomatonError,
    Cardinality,
    Counterexample,
    Dfa,
    LanguageSize,
    NotFactorClosedError,
    accepted_words,
    build_factor_automaton,
    count_words,
    includes,
    is_factor_closed,
    language_cardinality,
    minimize,
    reverse_dfa,
    to_dot,
    trim,
)
from .classify import (
    ClassificationReport,
    Growth,
    HilbertSeries,
    NotPrimeWitness,
    ResourceLimitError,
    Verdict,
    check_reversal_invariance,
    classify,
    growth,
    hilbert_series,
    is_prime,
)
from .presentation import (
    ParseError,
    Presentation,
    PresentationError,
    normalize,
    parse_automaton,
    parse_presentation,
    parse_source,
    parse_word,
    reverse_presentation,
)
from .structure import ClassStructure, choose_pivot, class_structure, connecting_word

__all__ = [
    "accepted_words",
    "AlgebraElement",
    "AlgebraError",
    "AutomatonError",
    "build_factor_automaton",
    "Cardinality",
    "check_reversal_invariance",
    "choose_pivot",
    "class_structure",
    "ClassificationReport",
    "classify",
    "ClassStructure",
    "connecting_word",
    "count_words",
    "Counterexample",
    "decompose_word",
    "Dfa",
    "element_add",
    "element_is_zero",
    "element_mul",
    "element_scale",
    "factor_over_generators",
    "first_return_language",
    "FirstReturnLanguage",
    "generator_count",
    "GeneratorCount",
    "Growth",
    "growth",
    "hilbert_series",
    "HilbertSeries",
    "ideal_intersection_witness",
    "includes",
    "is_factor_closed",
    "is_prime",
    "is_q_avoiding",
    "language_cardinality",
    "LanguageSize",
    "leading_support",
    "minimize",
    "normalize",
    "NotFactorClosedError",
    "NotPrimeWitness",
    "parse_automaton",
    "parse_element",
    "parse_presentation",
    "parse_source",
    "parse_word",
    "ParseError",
    "Presentation",
    "PresentationError",
    "ResourceLimitError",
    "reverse_dfa",
    "reverse_presentation",
    "to_dot",
    "trim",
    "Verdict",
]

__version__ = "0.1.0"
