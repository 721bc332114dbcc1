import random
from itertools import product

import pytest

from asdim.errors import InputError, ResourceLimitExceeded
from asdim.lab.ball import BsCayley, F2Cayley, Z2Cayley, build_ball, parse_group
from asdim.lab.britton import BsGroup
from oracles import bfs_distances, bs_equal

GENS = [("a", 1), ("a", -1), ("t", 1), ("t", -1)]


def test_sizes():
    assert len(build_ball(F2Cayley(), 3)) == 1 + 4 + 12 + 36
    assert len(build_ball(Z2Cayley(), 5)) == 2 * 5 * 6 + 1
    assert len(build_ball(BsCayley(BsGroup(1, 1)), 5)) == 61


@pytest.mark.parametrize("m, n, radius", [(1, 2, 2), (1, 2, 3), (2, 3, 3)])
def test_bs_ball_matches_word_classes(m, n, radius):
    """Group all words of length <= radius by the pinch-reduction oracle."""
    classes: list[list] = []
    for k in range(radius + 1):
        for word in product(GENS, repeat=k):
            for c in classes:
                if bs_equal(list(word), c, m, n):
                    break
            else:
                classes.append(list(word))
    ball = build_ball(BsCayley(BsGroup(m, n)), radius)
    assert len(ball) == len(classes)


def test_norms_are_bfs_layers():
    ball = build_ball(BsCayley(BsGroup(2, 3)), 6)
    for x in ball.order:
        for _, y in ball.neighbors(x):
            assert abs(ball.norms[x] - ball.norms[y]) <= 1


@pytest.mark.parametrize("text", ["bs:1:2", "bs:2:3", "bs:2:-3", "z2", "f2"])
def test_certified_distance_against_bfs(text):
    group = parse_group(text)
    pad = 3
    ball = build_ball(group, 4, pad=pad)
    rng = random.Random(1)
    for x in rng.sample(ball.order, 25):
        truth = bfs_distances(group, x, pad)
        for y in rng.sample(ball.order, min(60, len(ball))):
            got = ball.certified_distance(x, y)
            assert got == truth.get(y, pad + 1)


def test_pad_larger_than_radius():
    ball = build_ball(BsCayley(BsGroup(1, 2)), 2, pad=4)
    assert len(ball.pad_ball) == len(build_ball(BsCayley(BsGroup(1, 2)), 4))


def test_vertex_cap():
    with pytest.raises(ResourceLimitExceeded):
        build_ball(BsCayley(BsGroup(2, 3)), 10, vertex_cap=1000)
    with pytest.raises(ResourceLimitExceeded):
        build_ball(F2Cayley(), 2, pad=9, vertex_cap=1000)


@pytest.mark.parametrize("text", ["bs:0:2", "bs:1", "bs:x:2", "z3", ""])
def test_bad_group(text):
    with pytest.raises(InputError):
        parse_group(text)
