import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asdim.errors import InputError
from asdim.lab.britton import (
    IDENTITY,
    BrittonForm,
    BsGroup,
    LeftForm,
    TreeVertex,
    britton_normalize,
    coset_representative,
    from_left,
    inverse,
    left_normal_form,
    multiply,
    to_syllables,
    tree_distance,
    tree_project,
)
from oracles import bs_affine, bs_equal, bs_pinch_reduce

GROUPS = [(1, 2), (2, 3), (1, 1), (2, -3), (-1, 2), (3, 3)]
letter = st.tuples(st.sampled_from("at"), st.sampled_from((1, -1, 2, -2)))
words = st.lists(letter, max_size=14)


def test_spec_examples():
    assert britton_normalize([("t", 1), ("a", 1), ("t", -1)], BsGroup(1, 2)) == britton_normalize([("a", 2)], BsGroup(1, 2))
    w = britton_normalize([("a", 3), ("t", 1)], BsGroup(2, 3))
    assert w == BrittonForm(3, ((1, 0),))
    w = britton_normalize([("a", 1), ("t", 1), ("a", 1), ("t", 1)], BsGroup(2, 3))
    assert w.length == 2
    assert tree_project(w, BsGroup(2, 3)).level == 2


def test_relator_is_trivial():
    for m, n in GROUPS:
        grp = BsGroup(m, n)
        assert britton_normalize([("t", 1), ("a", m), ("t", -1), ("a", -n)], grp) == IDENTITY


def test_zero_parameter_rejected():
    with pytest.raises(InputError):
        BsGroup(0, 2)
    with pytest.raises(InputError):
        britton_normalize([("b", 1)], BsGroup(1, 2))


def _rep_ok(w: BrittonForm, grp: BsGroup) -> bool:
    for e, s in w.tail:
        if not 0 <= s < abs(grp.m if e == 1 else grp.n):
            return False
    return all(not (w.tail[i][0] == -w.tail[i + 1][0] and w.tail[i][1] == 0) for i in range(len(w.tail) - 1))


@settings(max_examples=400)
@given(st.sampled_from(GROUPS), words)
def test_normal_form_is_reduced_and_equal(mn, word):
    grp = BsGroup(*mn)
    w = britton_normalize(word, grp)
    assert _rep_ok(w, grp)
    assert britton_normalize(to_syllables(w), grp) == w
    assert bs_equal(word, to_syllables(w), *mn)
    assert bs_affine(word, *mn) == bs_affine(to_syllables(w), *mn)
    # the t-length is invariant: the pinch-reduced word has as many t letters as the normal form
    reduced = bs_pinch_reduce(word, *mn)
    assert sum(1 for g, _ in reduced if g == "t") == w.length


def test_thousand_random_pairs_against_oracle():
    rng = random.Random(2)
    for _ in range(1000):
        m, n = rng.choice(GROUPS)
        grp = BsGroup(m, n)
        u = [(rng.choice("at"), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))]
        v = list(u)
        # v differs from u by an inserted relator, so they are equal in the group
        k = rng.randint(0, len(v))
        v[k:k] = [("t", 1), ("a", m), ("t", -1), ("a", -n)] if rng.random() < 0.5 else [("a", 5), ("a", -5)]
        assert britton_normalize(u, grp) == britton_normalize(v, grp)
        w = [(rng.choice("at"), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))]
        same = britton_normalize(u, grp) == britton_normalize(w, grp)
        assert same == bs_equal(u, w, m, n)


def test_bs11_is_z2():
    grp = BsGroup(1, 1)
    rng = random.Random(4)
    for _ in range(300):
        word = [(rng.choice("at"), rng.choice((1, -1))) for _ in range(rng.randint(0, 16))]
        x = sum(e for g, e in word if g == "a")
        y = sum(e for g, e in word if g == "t")
        w = britton_normalize(word, grp)
        assert w == britton_normalize([("a", x), ("t", y)], grp)


@settings(max_examples=300)
@given(st.sampled_from(GROUPS), words, words)
def test_group_laws(mn, u, v):
    grp = BsGroup(*mn)
    x, y = britton_normalize(u, grp), britton_normalize(v, grp)
    assert multiply(x, y, grp) == britton_normalize(u + v, grp)
    assert multiply(x, inverse(x, grp), grp) == IDENTITY
    assert multiply(inverse(x, grp), x, grp) == IDENTITY


@settings(max_examples=300)
@given(st.sampled_from(GROUPS), words)
def test_left_form_round_trip(mn, word):
    grp = BsGroup(*mn)
    x = britton_normalize(word, grp)
    lf = left_normal_form(x, grp)
    assert from_left(lf, grp) == x
    assert len(lf.syllables) == x.length
    for e, s in lf.syllables:
        assert 0 <= s < abs(grp.n if e == 1 else grp.m)


@settings(max_examples=300)
@given(st.sampled_from(GROUPS), words, st.integers(-9, 9))
def test_tree_projection(mn, word, c):
    grp = BsGroup(*mn)
    x = britton_normalize(word, grp)
    u = tree_project(x, grp)
    # right multiplication by the vertex group fixes the vertex
    assert tree_project(multiply(x, britton_normalize([("a", c)], grp), grp), grp) == u
    # t moves to an adjacent vertex
    for e in (1, -1):
        v = tree_project(multiply(x, britton_normalize([("t", e)], grp), grp), grp)
        assert tree_distance(u, v) == 1
    g_u = coset_representative(u, grp)
    assert tree_project(g_u, grp) == u
    assert left_normal_form(g_u, grp) == LeftForm(u.path, 0)


def test_tree_distance():
    u = TreeVertex(((1, 0), (1, 1)))
    v = TreeVertex(((1, 0), (-1, 0)))
    assert tree_distance(u, v) == 2
    assert tree_distance(u, TreeVertex(())) == 2
    assert TreeVertex(((1, 0),)).is_prefix_of(u)
    assert not v.is_prefix_of(u)
