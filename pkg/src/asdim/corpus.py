"""Seeded random inputs: one-relator presentations and graphs of groups."""
from __future__ import annotations

import random

from .errors import InputError
from .presentation import GogEdge, GogVertex, GraphOfGroups, OneRelatorPresentation
from .words import Alphabet, CyclicWord

NAMES = "abcdefghijklmnopqrsuvwyz"  # t and x are kept free for the Magnus embedding


def random_cyclic_word(rng: random.Random, alphabet: Alphabet, length: int) -> CyclicWord:
    """Uniform among cyclically reduced words of exactly ``length`` letters (rejection sampling)."""
    if length < 1:
        raise InputError("relator length must be positive")
    gens = list(alphabet)
    while True:
        letters = [(rng.choice(gens), rng.choice((1, -1))) for _ in range(length)]
        ok = all(letters[i] != (letters[i - 1][0], -letters[i - 1][1]) for i in range(length))
        if length == 1 or ok:
            return CyclicWord.from_letters(letters)


def random_presentation(rng: random.Random, n_gens: int, length: int) -> OneRelatorPresentation:
    if not 1 <= n_gens <= len(NAMES):
        raise InputError(f"number of generators must be in 1..{len(NAMES)}")
    alphabet = Alphabet(NAMES[:n_gens])
    return OneRelatorPresentation(alphabet, random_cyclic_word(rng, alphabet, length))


def presentation_corpus(
    seed: int,
    count: int,
    gens: tuple[int, int] = (2, 4),
    lengths: tuple[int, int] = (4, 14),
) -> list[OneRelatorPresentation]:
    rng = random.Random(seed)
    return [random_presentation(rng, rng.randint(*gens), rng.randint(*lengths)) for _ in range(count)]


def random_gog(
    rng: random.Random,
    max_vertices: int = 8,
    max_edges: int = 12,
    max_asdim: int = 4,
) -> GraphOfGroups:
    """A connected graph of groups with declared asdim values; loops and multi-edges allowed."""
    nv = rng.randint(1, max_vertices)
    ids = [f"v{i}" for i in range(nv)]
    vertices = tuple(GogVertex(v, asdim=rng.randint(0, max_asdim)) for v in ids)
    ends = [(ids[rng.randrange(i)], ids[i]) for i in range(1, nv)]  # random tree keeps it connected
    extra = rng.randint(0, max(0, max_edges - len(ends)))
    ends += [(rng.choice(ids), rng.choice(ids)) for _ in range(extra)]
    rng.shuffle(ends)
    edges = tuple(GogEdge(f"e{i:02d}", e, rng.randint(0, max_asdim)) for i, e in enumerate(ends))
    return GraphOfGroups(vertices, edges)


def gog_corpus(seed: int, count: int) -> list[GraphOfGroups]:
    rng = random.Random(seed)
    return [random_gog(rng) for _ in range(count)]
