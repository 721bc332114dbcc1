import random
from itertools import product

import pytest

from asdim.classify import ClassTag, boundary_note, classify, replay, whitehead_minimize
from asdim.magnus import analyze
from asdim.presentation import OneRelatorPresentation, parse_presentation
from asdim.words import Alphabet, CyclicWord, Word, cyclic_reduce, free_reduce
from oracles import orbit_minimum

AB = Alphabet("ab")


@pytest.mark.parametrize(
    "text, value",
    [
        ("<a | a^5>", 0),
        ("<a | a>", 0),
        ("<a, b | a>", 1),
        ("<a, b | a^2>", 1),
        ("<a, b, c | a b>", 1),
        ("<a, b | a b a^-1 b^-1>", 2),
        ("<a, b | a^2 b^-3>", 2),
        ("<a, b | a b a b^-1>", 2),
        ("<a, b | a^2 b^2>", 2),
        ("<a, b | a b a^-1 b^2>", 2),
    ],
)
def test_table(text, value):
    assert classify(parse_presentation(text)).exact_asdim == value


def test_tags_and_fields():
    c = classify(parse_presentation("<a, b, c | a b a^-1 b^-1>"))
    assert (c.class_tag, c.k, c.free_rank) == (ClassTag.INDECOMPOSABLE_FACTOR, 2, 1)
    c = classify(parse_presentation("<a | a^5>"))
    assert c.class_tag is ClassTag.FINITE_CYCLIC and c.free_rank == 0
    c = classify(parse_presentation("<a, b | a^3>"))
    assert c.class_tag is ClassTag.FREE_OR_FREE_TIMES_FINITE_CYCLIC and c.free_rank == 1


def _cyclic_words(n):
    seen = set()
    for letters in product([("a", 1), ("a", -1), ("b", 1), ("b", -1)], repeat=n):
        if any(letters[i] == (letters[i - 1][0], -letters[i - 1][1]) for i in range(n)):
            continue
        key = min(letters[k:] + letters[:k] for k in range(n))
        if key not in seen:
            seen.add(key)
            yield list(key)


def test_whitehead_matches_orbit_oracle():
    """Every cyclically reduced word on two letters up to length 8, up to rotation."""
    checked = 0
    for n in range(1, 9):
        for letters in _cyclic_words(n):
            r = CyclicWord.from_letters(letters)
            best, minima = orbit_minimum(letters, ["a", "b"])
            got, applied = whitehead_minimize(r, AB)
            assert len(got) == best, letters
            assert len(got.generators()) == len({g for g, _ in next(iter(minima))}), letters
            assert replay(r, AB, applied) == got
            checked += 1
    assert checked > 1000


def test_invariant_under_rotation_and_inversion():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 10)
        raw = [(rng.choice("ab"), rng.choice((1, -1))) for _ in range(n)]
        r, _ = cyclic_reduce(free_reduce(raw))
        if not r:
            continue
        base = classify(OneRelatorPresentation(AB, r)).exact_asdim
        rot = r.rotate(rng.randint(0, 9))
        inv = CyclicWord.of(r.inverse())
        assert classify(OneRelatorPresentation(AB, rot)).exact_asdim == base
        assert classify(OneRelatorPresentation(AB, inv)).exact_asdim == base


def test_not_above_engine():
    for text in ("<a, b | a^2 b^-3>", "<a, b, c | a b c a b^10 a^-2 c^-1>", "<a, b | a b a^-1 b^2>"):
        P = parse_presentation(text)
        assert classify(P).exact_asdim <= analyze(P)[0]


def test_boundary_note():
    one = classify(parse_presentation("<a, b | a^2>"))
    two = classify(parse_presentation("<a, b | a^2 b^-3>"))
    zero = classify(parse_presentation("<a | a^2>"))
    assert "Cantor" in boundary_note(one)
    assert boundary_note(two) is None
    assert "Menger" in boundary_note(two, True)
    assert boundary_note(zero, True) is None
