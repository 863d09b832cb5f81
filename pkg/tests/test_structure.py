import pytest

from automalg import NotFactorClosedError, choose_pivot, class_structure, connecting_word
from automalg.structure import reach_sets, strongly_connected_components

from conftest import corpus_automata, factor_dfa
from corpus import NAMED
from oracles import all_words


def test_xx_yy_classes(xxyy):
    cs = class_structure(xxyy)
    assert cs.classes == ((0,), (1, 2))
    assert cs.order == ((True, True), (False, True))
    assert cs.maximal == (1,)
    assert choose_pivot(cs) == 1


def test_yx_classes(yx_dfa):
    assert yx_dfa.transitions == ((0, 1), (2, 1), (2, 2))
    cs = class_structure(yx_dfa)
    assert cs.classes == ((0,), (1,))
    assert cs.leq(0, 1) and not cs.leq(1, 0)
    assert cs.maximal == (1,)
    assert choose_pivot(cs) == 1


def test_free_pivot():
    cs = class_structure(factor_dfa(NAMED["free2"]))
    assert cs.classes == ((0,),)
    assert choose_pivot(cs) == 0


def test_requires_factor_closed(parity):
    with pytest.raises(NotFactorClosedError):
        class_structure(parity)


def test_connecting_word(xxyy, yx_dfa):
    assert connecting_word(xxyy, 1, 2) == ("y",)
    assert connecting_word(xxyy, 2, 2) == ()
    assert connecting_word(yx_dfa, 1, 0) is None


def test_tarjan_on_small_graph():
    graph = {0: [1], 1: [2], 2: [0, 3], 3: [4], 4: [3], 5: []}
    comps = strongly_connected_components(sorted(graph), graph.__getitem__)
    assert sorted(sorted(c) for c in comps) == [[0, 1, 2], [3, 4], [5]]
    # reverse topological: {3, 4} is emitted before {0, 1, 2}
    order = [sorted(c) for c in comps]
    assert order.index([3, 4]) < order.index([0, 1, 2])


@pytest.mark.parametrize("name, a", sorted(corpus_automata().items()))
def test_structure_invariants(name, a):
    cs = class_structure(a)
    reach = reach_sets(a)
    states = sorted(a.accepting)
    for p in states:
        for q in states:
            mutual = q in reach[p] and p in reach[q]
            assert (cs.class_of[p] == cs.class_of[q]) == mutual
            assert cs.leq(cs.class_of[p], cs.class_of[q]) == (q in reach[p])
            assert (connecting_word(a, p, q) is not None) == (q in reach[p])
    n = len(cs.classes)
    for c in range(n):
        for d in range(n):
            if cs.leq(c, d) and cs.leq(d, c):
                assert c == d
            for e in range(n):
                if cs.leq(c, d) and cs.leq(d, e):
                    assert cs.leq(c, e)
    for m in cs.maximal:
        for q in states:
            if q in reach[cs.classes[m][0]]:
                assert cs.class_of[q] == m
    assert choose_pivot(cs) == choose_pivot(class_structure(a))


def test_connecting_word_is_shortest(xxyy):
    for p in range(3):
        for q in range(3):
            w = connecting_word(xxyy, p, q)
            if w is None:
                continue
            assert xxyy.run(p, w) == q
            shorter = [u for u in all_words(xxyy.alphabet, len(w) - 1) if xxyy.run(p, u) == q]
            assert not shorter
