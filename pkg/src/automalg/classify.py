"""Primeness, growth, Hilbert series and the primitive/PI dichotomy.

A prime automaton algebra is classified through the state subalgebra at a
pivot state q taken from a maximal class: that subalgebra is free on the
first-return words at q.  With at most one generator the algebra has GK
dimension at most one and is PI; with two or more it is primitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from . import _poly
from .algebra import GeneratorCount, first_return_language, generator_count
from .automaton import (
    AutomatonError,
    Cardinality,
    Dfa,
    LanguageSize,
    build_factor_automaton,
    count_sequence,
    is_factor_closed,
    minimize,
    reachable_from,
    require_factor_closed,
    useful_states,
)
from .presentation import Presentation, format_word, normalize, reverse_presentation
from .structure import ClassStructure, choose_pivot, class_structure, connecting_word, strongly_connected_components

DEFAULT_MAX_SETS = 1 << 20


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class NotPrimeWitness:
    """Nonzero words u, v with u*w*v = 0 for every word w.  Falsy."""

    u: tuple
    v: tuple

    def __bool__(self):
        return False

    def __iter__(self):
        return iter((self.u, self.v))


def _word_key(a: Dfa, word) -> tuple:
    return (len(word), tuple(a.symbol_index(s) for s in word))


def _require_nonempty(a: Dfa) -> None:
    if a.initial not in a.accepting:
        raise AutomatonError("the automaton accepts no words")


def is_prime(a: Dfa, max_sets: int = DEFAULT_MAX_SETS) -> Union[bool, NotPrimeWitness]:
    """Decide primeness of the algebra of a minimal factor-closed automaton.

    Nonzero ``u`` and ``v`` admit a middle word exactly when the live states
    reachable from ``run(q0, u)`` meet the set of live states from which
    ``v`` can be read.  The latter sets are enumerated by extending ``v`` on
    the left, one level of word length at a time.
    """
    require_factor_closed(a)
    _require_nonempty(a)
    live = sorted(a.accepting)
    reach = {p: frozenset(reachable_from(a, [p])) & a.accepting for p in live}

    start = frozenset(live)
    best = {start: ()}
    level = [((), start)]
    while level:
        found: list = []
        for v, viable in level:
            for c, sym in enumerate(a.alphabet):
                ext = frozenset(r for r in live if a.transitions[r][c] in viable)
                if a.initial in ext and ext not in best:
                    found.append(((sym,) + v, ext))
        found.sort(key=lambda item: _word_key(a, item[0]))
        level = []
        for v, ext in found:
            if ext not in best:
                best[ext] = v
                level.append((v, ext))
        if len(best) > max_sets:
            raise ResourceLimitError(f"more than {max_sets} viability sets")

    bad = []
    for p in live:
        missing = [v for viable, v in best.items() if not (viable & reach[p])]
        if missing:
            u = connecting_word(a, a.initial, p)
            bad.append((_word_key(a, u), u, min(missing, key=lambda w: _word_key(a, w))))
    if not bad:
        return True
    _, u, v = min(bad)
    return NotPrimeWitness(u, v)


@dataclass(frozen=True)
class Growth:
    kind: str  # "polynomial" or "exponential"
    gk: Optional[int] = None

    def to_dict(self) -> dict:
        if self.kind == "polynomial":
            return {"kind": "polynomial", "gk": self.gk}
        return {"kind": "exponential"}

    def __str__(self):
        if self.kind == "polynomial":
            return f"polynomial, GK dimension {self.gk}"
        return "exponential"


def _useful_graph(a: Dfa):
    useful = useful_states(a)
    succ = {s: [t for t in a.transitions[s] if t in useful] for s in sorted(useful)}
    return useful, succ


def growth(a: Dfa) -> Growth:
    """Exponential iff some strongly connected component carries two
    distinct cycles; otherwise GK dimension is the largest number of
    cycles met along a path of the condensation."""
    require_factor_closed(a)
    useful, succ = _useful_graph(a)
    if not useful:
        return Growth("polynomial", 0)
    comps = strongly_connected_components(sorted(useful), succ.__getitem__)
    comp_of = {s: i for i, comp in enumerate(comps) for s in comp}
    depth = [0] * len(comps)
    # Tarjan emits components in reverse topological order
    for i, comp in enumerate(comps):
        members = set(comp)
        inner = sum(1 for s in comp for t in succ[s] if t in members)
        if inner > len(comp):
            return Growth("exponential")
        below = [depth[comp_of[t]] for s in comp for t in succ[s] if comp_of[t] != i]
        depth[i] = (1 if inner else 0) + max(below, default=0)
    return Growth("polynomial", depth[comp_of[a.initial]])


@dataclass(frozen=True)
class HilbertSeries:
    """Reduced rational generating function; ascending integer coefficients."""

    numerator: tuple
    denominator: tuple

    def coefficients(self, n: int) -> list:
        return _poly.series(list(self.numerator), list(self.denominator), n)

    def to_dict(self) -> dict:
        return {"numerator": list(self.numerator), "denominator": list(self.denominator)}

    def __str__(self):
        if self.denominator == (1,):
            return _poly.to_str(self.numerator)
        return f"{_poly.to_str(self.numerator)} / {_poly.to_str(self.denominator)}"


def hilbert_series(a: Dfa) -> HilbertSeries:
    """Generating function of the word counts, det(I - tM) over the useful
    states as denominator, reduced by the polynomial gcd."""
    require_factor_closed(a)
    useful, succ = _useful_graph(a)
    if not useful:
        return HilbertSeries((0,), (1,))
    states = sorted(useful)
    pos = {s: i for i, s in enumerate(states)}
    n = len(states)
    matrix = [[0] * n for _ in range(n)]
    for s in states:
        for t in succ[s]:
            matrix[pos[s]][pos[t]] += 1
    den = _poly.char_reversed(matrix)
    counts = count_sequence(a, n - 1)
    num = _poly.mul(counts, den)[:n]
    num = _poly.trim(num)
    g = _poly.gcd(num, den)
    g = [c / g[0] for c in g]
    num = _poly.as_integers(_poly.divmod_(num, g)[0])
    den = _poly.as_integers(_poly.divmod_(den, g)[0])
    return HilbertSeries(tuple(num) or (0,), tuple(den))


class Verdict(Enum):
    NOT_MONOMIAL_LANGUAGE = "not_monomial_language"
    NOT_PRIME = "not_prime"
    PI = "pi"
    PRIMITIVE = "primitive"

    @property
    def label(self) -> str:
        return {
            "not_monomial_language": "NotMonomialLanguage",
            "not_prime": "NotPrime",
            "pi": "PI",
            "primitive": "Primitive",
        }[self.value]


def _words(ws):
    return [format_word(w, "") for w in ws]


def _dfa_dict(a: Dfa) -> dict:
    return {
        "states": a.state_count,
        "initial": a.initial,
        "accepting": sorted(a.accepting),
        "transitions": [list(row) for row in a.transitions],
    }


@dataclass(frozen=True)
class ClassificationReport:
    source: Union[Presentation, Dfa]
    minimal: Dfa
    factor_closed: bool
    prime: Optional[bool] = None
    prime_witness: Optional[NotPrimeWitness] = None
    classes: Optional[ClassStructure] = None
    pivot: Optional[int] = None
    generator_count: Optional[GeneratorCount] = None
    generators_size: Optional[LanguageSize] = None
    generators_sample: tuple = ()
    growth: Optional[Growth] = None
    hilbert: Optional[HilbertSeries] = None
    verdict: Verdict = Verdict.NOT_MONOMIAL_LANGUAGE

    def _input_dict(self) -> dict:
        src = self.source
        if isinstance(src, Presentation):
            return {
                "type": "presentation",
                "letters": list(src.alphabet),
                "forbidden": _words(src.forbidden),
            }
        return {"type": "automaton", "letters": list(src.alphabet), **_dfa_dict(src)}

    def _generator_count_str(self) -> Optional[str]:
        if self.generator_count is None:
            return None
        if self.generators_size.kind is Cardinality.INFINITE:
            return "infinite"
        return self.generator_count.value

    def to_dict(self) -> dict:
        cs = self.classes
        witness = None
        if self.prime_witness is not None:
            witness = {"u": format_word(self.prime_witness.u, ""), "v": format_word(self.prime_witness.v, "")}
        return {
            "input": self._input_dict(),
            "minimal_automaton": _dfa_dict(self.minimal),
            "factor_closed": self.factor_closed,
            "prime": self.prime,
            "prime_witness": witness,
            "classes": [list(c) for c in cs.classes] if cs else None,
            "class_order": [list(r) for r in cs.order] if cs else None,
            "maximal_classes": list(cs.maximal) if cs else None,
            "pivot": self.pivot,
            "generator_count": self._generator_count_str(),
            "generators_sample": _words(self.generators_sample),
            "growth": self.growth.to_dict() if self.growth else None,
            "hilbert": self.hilbert.to_dict() if self.hilbert else None,
            "verdict": self.verdict.value,
        }

    def to_text(self) -> str:
        def yn(flag):
            return "yes" if flag else "no"

        src = self.source
        if isinstance(src, Presentation):
            rels = ", ".join(format_word(w) for w in src.forbidden) or "none"
            lines = [f"input: presentation on {' '.join(src.alphabet)}; relations: {rels}"]
        else:
            lines = [f"input: automaton on {' '.join(src.alphabet)}, {src.state_count} states"]
        n = self.minimal.state_count
        lines.append(f"minimal automaton: {n} state{'s' if n != 1 else ''}")
        lines.append(f"factor closed: {yn(self.factor_closed)}")
        if self.prime is not None:
            if self.prime:
                lines.append("prime: yes")
            else:
                u, v = self.prime_witness
                lines.append(f"prime: no (u = {format_word(u)}, v = {format_word(v)})")
        if self.classes is not None:
            cs = self.classes
            lines.append("classes: " + " ".join("{" + " ".join(f"q{s}" for s in c) + "}" for c in cs.classes))
            lines.append("maximal classes: " + " ".join(
                "{" + " ".join(f"q{s}" for s in cs.classes[m]) + "}" for m in cs.maximal))
        if self.pivot is not None:
            lines.append(f"pivot: q{self.pivot}")
            sample = ", ".join(format_word(w) for w in self.generators_sample)
            lines.append(f"generators: {self._generator_count_str()}" + (f" ({sample})" if sample else ""))
        if self.growth is not None:
            lines.append(f"growth: {self.growth}")
        if self.hilbert is not None:
            lines.append(f"hilbert: {self.hilbert}")
        lines.append(f"verdict: {self.verdict.label}")
        return "\n".join(lines) + "\n"


def classify(source: Union[Presentation, Dfa], max_sets: int = DEFAULT_MAX_SETS) -> ClassificationReport:
    if isinstance(source, Presentation):
        source = normalize(source)
        dfa = build_factor_automaton(source)
    else:
        dfa = source
    m = minimize(dfa)
    closed = is_factor_closed(m) and m.initial in m.accepting
    if not closed:
        return ClassificationReport(source, m, False)

    prime = is_prime(m, max_sets=max_sets)
    grow = growth(m)
    hilb = hilbert_series(m)
    cs = class_structure(m)
    if prime is not True:
        return ClassificationReport(
            source, m, True, prime=False, prime_witness=prime, classes=cs,
            growth=grow, hilbert=hilb, verdict=Verdict.NOT_PRIME,
        )

    q = choose_pivot(cs)
    gens = first_return_language(m, q)
    count = generator_count(gens)
    verdict = Verdict.PRIMITIVE if count is GeneratorCount.AT_LEAST_TWO else Verdict.PI
    small = grow.kind == "polynomial" and grow.gk <= 1
    if (verdict is Verdict.PI) != small:
        raise RuntimeError(f"inconsistent classification: {verdict.label} with growth {grow}")
    return ClassificationReport(
        source, m, True, prime=True, classes=cs, pivot=q,
        generator_count=count, generators_size=gens.cardinality(),
        generators_sample=tuple(gens.sample(5)), growth=grow, hilbert=hilb, verdict=verdict,
    )


def check_reversal_invariance(p: Presentation, max_len: int = 12) -> bool:
    """Classify ``p`` and its opposite and compare the ring-level data."""
    left = classify(p)
    right = classify(reverse_presentation(p))
    return (
        left.factor_closed == right.factor_closed
        and left.prime == right.prime
        and left.verdict is right.verdict
        and left.growth == right.growth
        and count_sequence(left.minimal, max_len) == count_sequence(right.minimal, max_len)
    )
