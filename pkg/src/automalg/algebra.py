"""Elements of an automaton algebra and its state subalgebras.

The nonzero words of the algebra are the words accepted by its minimal
automaton, and they form a basis.  For an accepting state ``q`` the *state
subalgebra* B is spanned by the words leading from ``q`` back to ``q``; it is
free on the first-return words

    E = { w : q -w-> q, and no nonempty proper prefix of w returns to q }.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Optional

from .automaton import Cardinality, Dfa, LanguageSize, accepted_words, language_cardinality, minimize
from .presentation import format_word
from .structure import class_structure, connecting_word, in_maximal_class


class AlgebraError(ValueError):
    pass


def _word_key(dfa: Dfa, word: tuple) -> tuple:
    return (len(word), tuple(dfa.symbol_index(s) for s in word))


class AlgebraElement:
    """Finite linear combination of nonzero words with rational coefficients.

    Words that vanish in the algebra are discarded on construction, as are
    zero coefficients.
    """

    __slots__ = ("dfa", "_terms")

    def __init__(self, dfa: Dfa, terms=None):
        clean: dict = {}
        for word, coeff in dict(terms or {}).items():
            word = tuple(word)
            coeff = Fraction(coeff)
            if coeff and dfa.accepts(word):
                clean[word] = clean.get(word, 0) + coeff
        ordered = sorted((w for w, c in clean.items() if c), key=lambda w: _word_key(dfa, w))
        self.dfa = dfa
        self._terms = {w: clean[w] for w in ordered}

    @classmethod
    def word(cls, dfa: Dfa, word, coeff=1) -> "AlgebraElement":
        return cls(dfa, {tuple(word): coeff})

    @classmethod
    def one(cls, dfa: Dfa) -> "AlgebraElement":
        return cls(dfa, {(): 1})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def support(self) -> tuple:
        """Support words in (length, alphabet) order."""
        return tuple(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_support(self) -> tuple:
        if not self._terms:
            raise AlgebraError("the zero element has no leading word")
        return next(iter(self._terms))

    def _check(self, other: "AlgebraElement") -> None:
        if self.dfa != other.dfa:
            raise AlgebraError("elements belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, 0) + c
        return AlgebraElement(self.dfa, terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = Fraction(c)
        return AlgebraElement(self.dfa, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return AlgebraElement(self.dfa, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.dfa == other.dfa and self._terms == other._terms

    def __hash__(self):
        return hash((self.dfa, tuple(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = format_word(w) if mag == 1 else f"{mag} {format_word(w, '')}".rstrip()
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"AlgebraElement({self})"


def element_add(e1: AlgebraElement, e2: AlgebraElement) -> AlgebraElement:
    return e1 + e2


def element_scale(c, e: AlgebraElement) -> AlgebraElement:
    return e.scale(c)


def element_mul(e1: AlgebraElement, e2: AlgebraElement) -> AlgebraElement:
    return e1 * e2


def element_is_zero(e: AlgebraElement) -> bool:
    return e.is_zero()


def leading_support(e: AlgebraElement) -> tuple:
    return e.leading_support()


# -- state subalgebras -----------------------------------------------------------


def is_q_avoiding(a: Dfa, q: int, word) -> bool:
    """True iff no nonempty prefix of ``word``, read from ``q``, ends at ``q``."""
    s = q
    for sym in word:
        s = a.step(s, sym)
        if s == q:
            return False
    return True


class GeneratorCount(Enum):
    ZERO = "zero"
    ONE = "one"
    AT_LEAST_TWO = "at_least_two"


@dataclass(frozen=True)
class FirstReturnLanguage:
    """First-return words at ``pivot``, recognised by ``dfa``."""

    pivot: int
    dfa: Dfa

    def cardinality(self) -> LanguageSize:
        return language_cardinality(self.dfa)

    def words(self, max_len: int) -> Iterator[tuple]:
        return accepted_words(self.dfa, max_len)

    def sample(self, limit: int = 5) -> list:
        """The first ``limit`` generators in (length, alphabet) order."""
        out: list = []
        size = self.cardinality()
        if size.kind is Cardinality.EMPTY:
            return out
        # a shortest word of E is shorter than the state count; each further
        # word is found within another state-count of letters
        horizon = self.dfa.state_count * (limit + 1)
        for w in self.words(horizon):
            out.append(w)
            if len(out) == limit:
                break
        return out


def _require_accepting(a: Dfa, q: int) -> None:
    if q not in a.accepting:
        raise AlgebraError(f"state {q} is not accepting")


def first_return_language(a: Dfa, q: int) -> FirstReturnLanguage:
    _require_accepting(a, q)
    n, k = a.state_count, len(a.alphabet)
    back, dead = n, n + 1
    table = [tuple(back if t == q else t for t in row) for row in a.transitions]
    table += [(dead,) * k, (dead,) * k]
    raw = Dfa(a.alphabet, tuple(table), q, frozenset([back]))
    return FirstReturnLanguage(q, minimize(raw))


def generator_count(e: FirstReturnLanguage) -> GeneratorCount:
    size = e.cardinality()
    if size.kind is Cardinality.EMPTY:
        return GeneratorCount.ZERO
    if size.kind is Cardinality.FINITE and size.count == 1:
        return GeneratorCount.ONE
    return GeneratorCount.AT_LEAST_TWO


def decompose_word(a: Dfa, q: int, word) -> tuple:
    """Split a nonzero word as ``b + x`` with ``b`` the longest prefix that
    leads ``q`` back to ``q`` and ``x`` the (q-avoiding) remainder."""
    word = tuple(word)
    _require_accepting(a, q)
    if not a.accepts(word):
        raise AlgebraError(f"word {format_word(word)!r} is zero in the algebra")
    cut, s = 0, q
    for i, sym in enumerate(word, start=1):
        s = a.step(s, sym)
        if s == q:
            cut = i
    return word[:cut], word[cut:]


def factor_over_generators(a: Dfa, q: int, word) -> Optional[list]:
    """Unique factorization of a ``q``-loop into first-return words, or
    ``None`` when ``word`` does not lead ``q`` back to ``q``."""
    word = tuple(word)
    _require_accepting(a, q)
    pieces, start, s = [], 0, q
    for i, sym in enumerate(word, start=1):
        s = a.step(s, sym)
        if s == q:
            pieces.append(word[start:i])
            start = i
    if start != len(word):
        return None
    return pieces


# -- ideal intersection witness ----------------------------------------------------


def _bfs_word(start, successors, is_goal) -> Optional[tuple]:
    """Shortest, then alphabetically first, word from ``start`` to a goal
    node; ``successors(node)`` yields (symbol, node) in alphabet order."""
    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if is_goal(node):
            word = []
            while parent[node] is not None:
                node, sym = parent[node]
                word.append(sym)
            return tuple(reversed(word))
        for sym, nxt in successors(node):
            if nxt is not None and nxt not in parent:
                parent[nxt] = (node, sym)
                queue.append(nxt)
    return None


def _synchronizing_prefix(a: Dfa, q: int) -> Optional[tuple]:
    """Shortest word sending the initial state and ``q`` to one common live
    state, so that afterwards acceptance and runs from ``q`` agree."""
    def successors(pair):
        for c, sym in enumerate(a.alphabet):
            s, t = a.transitions[pair[0]][c], a.transitions[pair[1]][c]
            ok = s in a.accepting and t in a.accepting
            yield sym, (s, t) if ok else None

    return _bfs_word((a.initial, q), successors, lambda p: p[0] == p[1])


def _distinguishing_word(a: Dfa, s1: int, s2: int) -> tuple:
    def successors(pair):
        for c, sym in enumerate(a.alphabet):
            yield sym, (a.transitions[pair[0]][c], a.transitions[pair[1]][c])

    word = _bfs_word(
        (s1, s2), successors, lambda p: (p[0] in a.accepting) != (p[1] in a.accepting)
    )
    if word is None:
        raise AlgebraError(f"states {s1} and {s2} are equivalent; automaton is not minimal")
    return word


def _image(a: Dfa, states, c: int) -> frozenset:
    return frozenset(t for t in (a.transitions[s][c] for s in states) if t in a.accepting)


def _collapse_by_refinement(a: Dfa, q: int, states: frozenset) -> tuple:
    """Kill terms pairwise with distinguishing words until one state is
    left, then connect it back to ``q``."""
    right: tuple = ()
    while len(states) > 1:
        s1, s2 = sorted(states)[:2]
        d = _distinguishing_word(a, s1, s2)
        right += d
        states = frozenset(t for t in (a.run(s, d) for s in states) if t in a.accepting)
    (s,) = states
    link = connecting_word(a, s, q)
    if link is None:
        raise AlgebraError(f"state {s} cannot return to {q}; pivot is not maximal")
    return right + link


def ideal_intersection_witness(a: Dfa, q: int, z: AlgebraElement, max_subsets: int = 1 << 16) -> tuple:
    """Words ``(v, r)`` with ``v*z*r`` nonzero and supported in the state
    subalgebra at ``q``.

    ``q`` must lie in a maximal class and the algebra must be prime.  The
    right factor is the shortest word collapsing every surviving term onto
    ``q`` at once; past ``max_subsets`` explored state sets it falls back to
    pairwise refinement, which is always polynomial.
    """
    from .classify import is_prime

    if z.dfa != a:
        raise AlgebraError("element belongs to a different algebra")
    if z.is_zero():
        raise AlgebraError("element is zero")
    cs = class_structure(a)
    if not in_maximal_class(cs, q):
        raise AlgebraError(f"state {q} is not in a maximal class")
    if is_prime(a) is not True:
        raise AlgebraError("algebra is not prime")

    support = z.support
    if all(a.run(q, w) == q for w in support):
        return (), ()

    sync = _synchronizing_prefix(a, q)
    if sync is None:
        raise AlgebraError(f"no word synchronizes the initial state with state {q}")
    s = a.run(q, sync)

    def successors(t):
        for sym, nxt in zip(a.alphabet, a.transitions[t]):
            yield sym, nxt if nxt in a.accepting else None

    lift = _bfs_word(s, successors, lambda t: any(a.run(t, w) in a.accepting for w in support))
    if lift is None:
        raise AlgebraError("no left multiplier keeps the element nonzero")
    v = sync + lift
    left = AlgebraElement.word(a, v) * z
    start = frozenset(a.run(q, w) for w in left.support)

    explored = 0

    def collapse(states):
        nonlocal explored
        explored += 1
        if explored > max_subsets:
            raise OverflowError
        for c, sym in enumerate(a.alphabet):
            img = _image(a, states, c)
            yield sym, img or None

    try:
        r = _bfs_word(start, collapse, lambda states: states == frozenset([q]))
    except OverflowError:
        r = None
    if r is None:
        r = _collapse_by_refinement(a, q, start)
    return v, r


def parse_element(text: str, a: Dfa) -> AlgebraElement:
    """Parse ``"num/den tok tok ...; ..."``; a bare coefficient is the
    multiple of 1."""
    from .presentation import parse_word

    terms: dict = {}
    for chunk in text.split(";"):
        tokens = chunk.split()
        if not tokens:
            continue
        try:
            coeff = Fraction(tokens[0])
        except (ValueError, ZeroDivisionError):
            raise AlgebraError(f"bad coefficient {tokens[0]!r}") from None
        word = parse_word(" ".join(tokens[1:]), a.alphabet)
        terms[word] = terms.get(word, 0) + coeff
    return AlgebraElement(a, terms)


def element_triples(e: AlgebraElement) -> list:
    """``[numerator, denominator, word]`` per term, for JSON output."""
    return [[c.numerator, c.denominator, format_word(w, "")] for w, c in e.terms.items()]
