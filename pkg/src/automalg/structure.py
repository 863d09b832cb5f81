"""Mutual-reachability classes of accepting states and their order.

Two accepting states are equivalent when each can reach the other; the
classes are ordered by one-way reachability.  The dichotomy pivots on a state
from a maximal class, which no accepting path ever leaves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automaton import Dfa, NotFactorClosedError, is_factor_closed, reachable_from


def strongly_connected_components(vertices, successors) -> list:
    """Tarjan's algorithm, iterative.  Components come out in reverse
    topological order (sinks of the condensation first)."""
    index: dict = {}
    lowlink: dict = {}
    on_stack: set = set()
    stack: list = []
    components: list = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(successors(root)))]
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(successors(w))))
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    lowlink[parent] = min(lowlink[parent], lowlink[v])
                if lowlink[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    components.append(comp)
    return components


@dataclass(frozen=True)
class ClassStructure:
    classes: tuple  # tuple of sorted state tuples, numbered by smallest member
    class_of: dict
    order: tuple  # order[c][d] is True iff class c reaches class d
    maximal: tuple

    def leq(self, c: int, d: int) -> bool:
        return self.order[c][d]


def reach_sets(a: Dfa) -> tuple:
    """For every state, the states reachable from it (itself included)."""
    return tuple(frozenset(reachable_from(a, [s])) for s in range(a.state_count))


def class_structure(a: Dfa) -> ClassStructure:
    if not is_factor_closed(a):
        raise NotFactorClosedError("class structure needs a factor-closed automaton")
    accepting = sorted(a.accepting)
    succ = {s: [t for t in a.transitions[s] if t in a.accepting] for s in accepting}
    comps = strongly_connected_components(accepting, succ.__getitem__)
    classes = sorted((tuple(sorted(c)) for c in comps), key=lambda c: c[0])
    class_of = {s: i for i, c in enumerate(classes) for s in c}
    reach = reach_sets(a)
    order = tuple(
        tuple(any(t in reach[c[0]] for t in d) for d in classes) for c in classes
    )
    maximal = tuple(
        c for c in range(len(classes))
        if not any(order[c][d] and d != c for d in range(len(classes)))
    )
    return ClassStructure(tuple(classes), class_of, order, maximal)


def connecting_word(a: Dfa, p: int, q: int) -> Optional[tuple]:
    """Shortest (then alphabetically first) word leading from ``p`` to ``q``;
    the path stays inside the accepting states when both ends accept."""
    inside = p in a.accepting and q in a.accepting
    parent = {p: None}
    queue = deque([p])
    while queue:
        s = queue.popleft()
        if s == q:
            word = []
            while parent[s] is not None:
                s, sym = parent[s]
                word.append(sym)
            return tuple(reversed(word))
        for sym, t in zip(a.alphabet, a.transitions[s]):
            if t in parent or (inside and t not in a.accepting):
                continue
            parent[t] = (s, sym)
            queue.append(t)
    return None


def choose_pivot(cs: ClassStructure) -> int:
    """Smallest state of the smallest-numbered maximal class."""
    if not cs.classes:
        raise ValueError("no accepting state to pivot on")
    return cs.classes[cs.maximal[0]][0]


def in_maximal_class(cs: ClassStructure, q: int) -> bool:
    return q in cs.class_of and cs.class_of[q] in cs.maximal
