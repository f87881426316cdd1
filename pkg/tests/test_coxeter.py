import itertools

import pytest
from hypothesis import given, strategies as st

from hecke_sheaves.coxeter import GroupMismatch, UnsupportedType, coxeter_group

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "G2": 12,
          "I2:3": 6, "I2:5": 10, "I2:7": 14}
CLASSES = {"A1": 2, "A2": 3, "A3": 5, "A4": 7, "B2": 5, "G2": 6, "I2:5": 4}


@pytest.mark.parametrize("label,order", sorted(ORDERS.items()))
def test_group_orders(label, order):
    assert len(coxeter_group(label)) == order


@pytest.mark.parametrize("label,count", sorted(CLASSES.items()))
def test_class_counts(label, count):
    G = coxeter_group(label)
    classes = G.conjugacy_classes()
    assert len(classes) == count
    assert sorted(w.index for c in classes for w in c) == list(range(len(G)))


def brute_force_classes(G):
    elems = G.all_elements()
    seen, out = set(), []
    for x in elems:
        if x in seen:
            continue
        orbit = {g * x * g.inverse() for g in elems}
        seen |= orbit
        out.append(orbit)
    return sorted(sorted(w.index for w in c) for c in out)


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2"])
def test_classes_match_brute_force(label):
    G = coxeter_group(label)
    assert sorted(G.conjugacy_class_indices()) == brute_force_classes(G)


def test_product_examples(A2):
    s1, s2 = A2.generators()
    assert (s1 * s1).is_identity()
    w = (s1 * s2) * s1
    assert w == A2.longest_element() and w.length() == 3
    B = coxeter_group("I2:4")
    t1, t2 = B.generators()
    x = t1 * t2
    assert (x * x * x * x).is_identity()


def test_group_mismatch(A1, A2):
    with pytest.raises(GroupMismatch):
        A1.identity() * A2.identity()
    with pytest.raises(GroupMismatch):
        A1.identity().bruhat_leq(A2.identity())


def test_unsupported():
    for label in ("A5", "D4", "I2:2", "H3"):
        with pytest.raises(UnsupportedType):
            coxeter_group(label)


def test_labels_are_aliases():
    assert coxeter_group("I2(5)") is coxeter_group("I2:5")


def test_lengths_and_descents(A2):
    w0 = A2.longest_element()
    assert A2.identity().length() == 0
    assert w0.descents_left() == {1, 2} == w0.descents_right()
    assert A2.element([1, 2]).descents_left() == {1}
    assert A2.element([1, 2]).descents_right() == {2}


def test_longest_and_omega(A1, A2):
    assert A1.longest_element().word == (1,)
    assert A2.longest_element().word == (1, 2, 1)
    s1, s2 = A2.generators()
    assert s1.omega() == s2


def subword_leq(y, w):
    # y <= w iff some subword of a reduced word of w multiplies to y
    G = w.group
    word = w.word
    for mask in itertools.product([0, 1], repeat=len(word)):
        sub = [s for s, keep in zip(word, mask) if keep]
        if G.element(sub) == y:
            return True
    return False


@pytest.mark.parametrize("label", ["A2", "B2", "A3"])
def test_bruhat_matches_subword_criterion(label):
    G = coxeter_group(label)
    for y in G:
        for w in G:
            assert y.bruhat_leq(w) == subword_leq(y, w)


def test_bruhat_examples(A2):
    s1, s2 = A2.generators()
    assert all(A2.identity().bruhat_leq(w) for w in A2)
    assert s1.bruhat_leq(s1 * s2)
    assert not s1.bruhat_leq(s2)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_bruhat_partial_order(label):
    G = coxeter_group(label)
    w0 = G.longest_element()
    for y in G:
        for w in G:
            if y.bruhat_leq(w):
                assert y.length() <= w.length()
                assert (y.length() == w.length()) == (y == w)
                assert (w0 * w).bruhat_leq(w0 * y)
                if w.bruhat_leq(y):
                    assert y == w


@pytest.mark.parametrize("label", ["A3", "B2", "G2", "I2:5"])
def test_canonical_words_are_shortlex_minimal(label):
    G = coxeter_group(label)
    for w in G:
        assert len(w.word) == w.length()
        for other in itertools.product(range(1, G.rank + 1), repeat=w.length()):
            if G.element(other) == w:
                assert w.word <= other
                break


@given(st.data())
def test_exchange_and_inverse(data):
    G = coxeter_group(data.draw(st.sampled_from(["A3", "B2", "G2"])))
    w = G.all_elements()[data.draw(st.integers(0, len(G) - 1))]
    assert w.inverse().length() == w.length()
    assert w.omega().omega() == w and w.omega().length() == w.length()
    for s in w.descents_left():
        # some reduced word of w starts with s
        rest = G.element((s,)) * w
        assert G.element((s,) + rest.word) == w and rest.length() == w.length() - 1
    x = G.all_elements()[data.draw(st.integers(0, len(G) - 1))]
    assert (w * x).inverse() == x.inverse() * w.inverse()
