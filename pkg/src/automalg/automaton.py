"""Deterministic finite automata over an ordered alphabet.

Automata are immutable and total: missing behaviour is an explicit
absorbing, non-accepting sink.  :func:`minimize` returns the canonical
minimal automaton, numbered breadth-first from the initial state with
letters explored in alphabet order and the sink (if any) last, so two
automata accept the same language exactly when their minimizations compare
equal.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence


class AutomatonError(ValueError):
    pass


class NotFactorClosedError(AutomatonError):
    """The accepted language is not closed under taking factors, so the
    rejected words do not span a two-sided ideal."""


@dataclass(frozen=True)
class Dfa:
    """A total DFA.  ``transitions[s][i]`` is the successor of state ``s``
    on the ``i``-th alphabet symbol."""

    alphabet: tuple
    transitions: tuple
    initial: int
    accepting: frozenset
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", tuple(tuple(r) for r in self.transitions))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.alphabet)})
        n, k = len(self.transitions), len(self.alphabet)
        if n == 0:
            raise AutomatonError("an automaton needs at least one state")
        if k == 0 or len(self._index) != k:
            raise AutomatonError("alphabet must be nonempty with distinct symbols")
        for row in self.transitions:
            if len(row) != k:
                raise AutomatonError("transition function is not total")
            if any(not 0 <= t < n for t in row):
                raise AutomatonError("transition target out of range")
        if not 0 <= self.initial < n:
            raise AutomatonError("initial state out of range")
        if any(not 0 <= s < n for s in self.accepting):
            raise AutomatonError("accepting state out of range")

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    def symbol_index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AutomatonError(f"unknown symbol {symbol!r}") from None

    def step(self, state: int, symbol: str) -> int:
        return self.transitions[state][self.symbol_index(symbol)]

    def run(self, state: int, word: Iterable[str]) -> int:
        """Extended transition function: the state reached from ``state``
        after reading ``word``."""
        for symbol in word:
            state = self.transitions[state][self.symbol_index(symbol)]
        return state

    def accepts(self, word: Iterable[str]) -> bool:
        return self.run(self.initial, word) in self.accepting

    def with_initial(self, state: int) -> "Dfa":
        return dataclasses.replace(self, initial=state)

    def to_text(self) -> str:
        """Serialize in the automaton file format."""
        lines = [
            "letters " + " ".join(self.alphabet),
            f"states {self.state_count}",
            f"initial {self.initial}",
            " ".join(["accept", *map(str, sorted(self.accepting))]),
        ]
        for s, row in enumerate(self.transitions):
            for sym, t in zip(self.alphabet, row):
                lines.append(f"trans {s} {sym} {t}")
        return "\n".join(lines) + "\n"


# -- graph helpers ------------------------------------------------------------


def reachable_from(a: Dfa, start: Iterable[int]) -> set:
    seen = set(start)
    stack = list(seen)
    while stack:
        s = stack.pop()
        for t in a.transitions[s]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def coreachable(a: Dfa) -> set:
    """States from which some accepting state can be reached."""
    preds: list = [set() for _ in range(a.state_count)]
    for s, row in enumerate(a.transitions):
        for t in row:
            preds[t].add(s)
    seen = set(a.accepting)
    stack = list(seen)
    while stack:
        t = stack.pop()
        for s in preds[t]:
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return seen


def useful_states(a: Dfa) -> set:
    """Reachable states that can still reach acceptance."""
    return reachable_from(a, [a.initial]) & coreachable(a)


def is_sink(a: Dfa, s: int) -> bool:
    return s not in a.accepting and all(t == s for t in a.transitions[s])


def _renumber(a: Dfa) -> Dfa:
    """Canonical numbering: BFS from the initial state over reachable
    states, absorbing rejecting states deferred to the end."""
    order: list = []
    sinks: list = []
    seen = {a.initial}
    queue = deque([a.initial])
    while queue:
        s = queue.popleft()
        (sinks if is_sink(a, s) and s != a.initial else order).append(s)
        for t in a.transitions[s]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    order += sinks
    new = {s: i for i, s in enumerate(order)}
    return Dfa(
        a.alphabet,
        tuple(tuple(new[t] for t in a.transitions[s]) for s in order),
        new[a.initial],
        frozenset(new[s] for s in a.accepting if s in new),
    )


# -- construction -------------------------------------------------------------


def build_factor_automaton(p) -> Dfa:
    """Automaton accepting exactly the words with no forbidden factor.

    Aho-Corasick construction: states are the proper prefixes of the
    forbidden words, plus a sink reached whenever a forbidden word has just
    been completed.  ``p`` is normalized first.
    """
    from .presentation import normalize

    p = normalize(p)
    k = len(p.alphabet)
    index = {s: i for i, s in enumerate(p.alphabet)}
    children: list = [{}]
    terminal = [False]
    for word in p.forbidden:
        node = 0
        for sym in word:
            c = index[sym]
            if c not in children[node]:
                children[node][c] = len(children)
                children.append({})
                terminal.append(False)
            node = children[node][c]
        terminal[node] = True

    n = len(children)
    goto = [[0] * k for _ in range(n)]
    fail = [0] * n
    queue: deque = deque()
    for c in range(k):
        child = children[0].get(c)
        if child is None:
            goto[0][c] = 0
        else:
            goto[0][c] = child
            queue.append(child)
    while queue:
        node = queue.popleft()
        for c in range(k):
            child = children[node].get(c)
            if child is None:
                goto[node][c] = goto[fail[node]][c]
            else:
                fail[child] = goto[fail[node]][c]
                goto[node][c] = child
                queue.append(child)

    live = [i for i in range(n) if not terminal[i]]
    sink = len(live)
    new = {old: i for i, old in enumerate(live)}
    table = []
    for old in live:
        table.append(tuple(sink if terminal[t] else new[t] for t in goto[old]))
    accepting = set(range(len(live)))
    if any(sink in row for row in table):
        table.append((sink,) * k)
    return _renumber(Dfa(p.alphabet, tuple(table), new[0], frozenset(accepting)))


def trim(a: Dfa) -> Dfa:
    """Drop states unreachable from the initial state.

    Successors of reachable states are reachable, so totality survives.
    """
    keep = sorted(reachable_from(a, [a.initial]))
    new = {s: i for i, s in enumerate(keep)}
    return Dfa(
        a.alphabet,
        tuple(tuple(new[t] for t in a.transitions[s]) for s in keep),
        new[a.initial],
        frozenset(new[s] for s in a.accepting if s in new),
    )


def hopcroft_partition(a: Dfa) -> list:
    """Myhill-Nerode classes of all states (reachable or not), as sorted
    lists ordered by smallest member."""
    n, k = a.state_count, len(a.alphabet)
    inverse = [[[] for _ in range(n)] for _ in range(k)]
    for s, row in enumerate(a.transitions):
        for c, t in enumerate(row):
            inverse[c][t].append(s)

    accepting = frozenset(a.accepting)
    rejecting = frozenset(range(n)) - accepting
    blocks = [b for b in (accepting, rejecting) if b]
    work = [min(blocks, key=len)] if len(blocks) == 2 else []
    while work:
        splitter = work.pop()
        for c in range(k):
            pre = {s for t in splitter for s in inverse[c][t]}
            if not pre:
                continue
            refined = []
            for block in blocks:
                inside = block & pre
                outside = block - pre
                if inside and outside:
                    refined += [inside, outside]
                    if block in work:
                        work.remove(block)
                        work += [inside, outside]
                    else:
                        work.append(min(inside, outside, key=len))
                else:
                    refined.append(block)
            blocks = refined
    return sorted((sorted(b) for b in blocks), key=lambda b: b[0])


def minimize(a: Dfa) -> Dfa:
    """Canonical minimal automaton for the language of ``a``."""
    blocks = hopcroft_partition(a)
    owner = {}
    for i, block in enumerate(blocks):
        for s in block:
            owner[s] = i
    quotient = Dfa(
        a.alphabet,
        tuple(tuple(owner[t] for t in a.transitions[b[0]]) for b in blocks),
        owner[a.initial],
        frozenset(owner[s] for s in a.accepting),
    )
    return _renumber(trim(quotient))


def is_minimal(a: Dfa) -> bool:
    return minimize(a) == a


def is_factor_closed(a: Dfa) -> bool:
    """True iff every factor of every accepted word is accepted.

    In the minimal automaton this means: the rejecting states form at most
    one absorbing sink (prefix closure), and deleting a first letter never
    leaves the language (suffix closure).
    """
    m = minimize(a)
    rejecting = [s for s in range(m.state_count) if s not in m.accepting]
    if len(rejecting) > 1:
        return False
    if rejecting and not is_sink(m, rejecting[0]):
        return False
    if m.initial not in m.accepting:
        return True  # empty language
    return all(includes(m, m.with_initial(t)) is True for t in set(m.transitions[m.initial]))


def require_factor_closed(a: Dfa) -> None:
    if not is_factor_closed(a):
        raise NotFactorClosedError(
            "accepted language is not factor-closed; the rejected words do not "
            "form a two-sided ideal"
        )


# -- counting -----------------------------------------------------------------


def count_sequence(a: Dfa, n: int) -> list:
    """``[count_words(a, 0), ..., count_words(a, n)]``."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    vec = [0] * a.state_count
    vec[a.initial] = 1
    out = []
    for length in range(n + 1):
        out.append(sum(vec[s] for s in a.accepting))
        if length == n:
            break
        nxt = [0] * a.state_count
        for s, mult in enumerate(vec):
            if mult:
                for t in a.transitions[s]:
                    nxt[t] += mult
        vec = nxt
    return out


def count_words(a: Dfa, n: int) -> int:
    """Number of accepted words of length exactly ``n``."""
    return count_sequence(a, n)[-1]


def accepted_words(a: Dfa, max_len: int) -> Iterator[tuple]:
    """Accepted words of length <= ``max_len`` in (length, alphabet) order."""
    # viable[m]: states with an accepted continuation of length exactly m
    viable = [frozenset(a.accepting)]
    for _ in range(max_len):
        prev = viable[-1]
        viable.append(frozenset(
            s for s in range(a.state_count) if any(t in prev for t in a.transitions[s])
        ))

    def walk(s, word, remaining):
        if remaining == 0:
            yield tuple(word)
            return
        for sym, t in zip(a.alphabet, a.transitions[s]):
            if t in viable[remaining - 1]:
                word.append(sym)
                yield from walk(t, word, remaining - 1)
                word.pop()

    for length in range(max_len + 1):
        if a.initial in viable[length]:
            yield from walk(a.initial, [], length)


class Cardinality(Enum):
    EMPTY = "empty"
    FINITE = "finite"
    INFINITE = "infinite"


@dataclass(frozen=True)
class LanguageSize:
    kind: Cardinality
    count: Optional[int] = None

    def __str__(self):
        if self.kind is Cardinality.FINITE:
            return f"finite({self.count})"
        return self.kind.value


def _has_cycle(a: Dfa, states: set) -> bool:
    color = dict.fromkeys(states, 0)
    for root in states:
        if color[root]:
            continue
        stack = [(root, iter(a.transitions[root]))]
        color[root] = 1
        while stack:
            s, it = stack[-1]
            for t in it:
                if t not in color:
                    continue
                if color[t] == 1:
                    return True
                if color[t] == 0:
                    color[t] = 1
                    stack.append((t, iter(a.transitions[t])))
                    break
            else:
                color[s] = 2
                stack.pop()
    return False


def language_cardinality(a: Dfa) -> LanguageSize:
    useful = useful_states(a)
    if not useful:
        return LanguageSize(Cardinality.EMPTY, 0)
    if _has_cycle(a, useful):
        return LanguageSize(Cardinality.INFINITE)
    # acyclic useful part: every accepted word is shorter than len(useful)
    total = sum(count_sequence(a, len(useful)))
    return LanguageSize(Cardinality.FINITE, total)


# -- comparisons ----------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    """A word accepted by one automaton and rejected by the other.  Falsy, so
    ``if includes(a, b):`` reads naturally."""

    word: tuple

    def __bool__(self):
        return False


def _check_alphabets(a: Dfa, b: Dfa) -> None:
    if a.alphabet != b.alphabet:
        raise AutomatonError(f"alphabet mismatch: {a.alphabet} vs {b.alphabet}")


def includes(a: Dfa, b: Dfa):
    """``True`` if L(b) is contained in L(a), else the shortest (then
    alphabetically first) :class:`Counterexample` accepted by ``b`` only."""
    _check_alphabets(a, b)
    start = (a.initial, b.initial)
    parent = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        sa, sb = pair
        if sb in b.accepting and sa not in a.accepting:
            word = []
            while parent[pair] is not None:
                pair, sym = parent[pair]
                word.append(sym)
            return Counterexample(tuple(reversed(word)))
        for c, sym in enumerate(a.alphabet):
            nxt = (a.transitions[sa][c], b.transitions[sb][c])
            if nxt not in parent:
                parent[nxt] = (pair, sym)
                queue.append(nxt)
    return True


def equivalent(a: Dfa, b: Dfa) -> bool:
    return includes(a, b) is True and includes(b, a) is True


def reverse_dfa(a: Dfa) -> Dfa:
    """Automaton for the reversed language, by subset construction on the
    reversed transitions.  The result is trimmed and canonically numbered
    but not minimized."""
    k = len(a.alphabet)
    inverse = [[[] for _ in range(a.state_count)] for _ in range(k)]
    for s, row in enumerate(a.transitions):
        for c, t in enumerate(row):
            inverse[c][t].append(s)
    start = frozenset(a.accepting)
    ids = {start: 0}
    table: list = []
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        row = []
        for c in range(k):
            nxt = frozenset(s for t in subset for s in inverse[c][t])
            if nxt not in ids:
                ids[nxt] = len(ids)
                queue.append(nxt)
            row.append(ids[nxt])
        table.append(tuple(row))
    accepting = frozenset(i for subset, i in ids.items() if a.initial in subset)
    return _renumber(Dfa(a.alphabet, tuple(table), 0, accepting))


def to_dot(a: Dfa, labels: Optional[Sequence[str]] = None, name: str = "automaton") -> str:
    """GraphViz rendering; accepting states are double circles and the
    initial state gets an arrow from an invisible point."""
    if labels is None:
        labels = [f"q{s}" for s in range(a.state_count)]
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for s in range(a.state_count):
        shape = "doublecircle" if s in a.accepting else "circle"
        lines.append(f'  {s} [shape={shape}, label="{labels[s]}"];')
    lines.append(f"  __start -> {a.initial};")
    for s, row in enumerate(a.transitions):
        grouped: dict = {}
        for sym, t in zip(a.alphabet, row):
            grouped.setdefault(t, []).append(sym)
        for t in sorted(grouped):
            lines.append(f'  {s} -> {t} [label="{",".join(grouped[t])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
