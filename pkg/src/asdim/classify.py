"""Exact asdim of one-relator groups via Whitehead minimization.

After minimizing the relator's cyclic length under Aut(F(S)), the number of
generators that still occur decides the answer: one generator means a finite
cyclic factor (or a primitive relator) next to a free group, two or more mean
a freely indecomposable non-cyclic factor, which has asdim exactly 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product

from .presentation import OneRelatorPresentation
from .words import Alphabet, CyclicWord, Word


class ClassTag(str, Enum):
    FINITE_CYCLIC = "FiniteCyclic"
    FREE_OR_FREE_TIMES_FINITE_CYCLIC = "FreeOrFreeTimesFiniteCyclic"
    INDECOMPOSABLE_FACTOR = "IndecomposableFactor"


# Letters are coded as 2*i for generator i and 2*i + 1 for its inverse.
def _inv(code: int) -> int:
    return code ^ 1


@dataclass(frozen=True, order=True)
class WhiteheadAutomorphism:
    """Either a signed permutation (kind 1) or an ``(A, x)`` cut automorphism (kind 2).

    For kind 2, ``x`` is a letter code and ``cut`` the sorted codes of ``A``
    (``x`` in ``A``, ``x^-1`` not in ``A``).  A generator ``y`` other than
    ``x^±1`` is sent to ``x^-1 y`` if ``y^-1`` is in ``A`` and then multiplied
    by ``x`` on the right if ``y`` is in ``A``.  For kind 1, ``perm[i]`` is the
    letter code that generator ``i`` is sent to.
    """

    kind: int
    x: int = -1
    cut: tuple[int, ...] = ()
    perm: tuple[int, ...] = ()

    def images(self, rank: int) -> list[list[int]]:
        if self.kind == 1:
            return [[self.perm[i]] for i in range(rank)]
        cut = set(self.cut)
        xg = self.x >> 1
        out = []
        for i in range(rank):
            if i == xg:
                out.append([2 * i])
                continue
            img = [2 * i]
            if 2 * i + 1 in cut:
                img = [_inv(self.x)] + img
            if 2 * i in cut:
                img = img + [self.x]
            out.append(img)
        return out

    def describe(self, alphabet: Alphabet) -> str:
        name = lambda c: f"{alphabet.names[c >> 1]}" + ("^-1" if c & 1 else "")
        if self.kind == 1:
            return "perm(" + ", ".join(f"{alphabet.names[i]}->{name(c)}" for i, c in enumerate(self.perm)) + ")"
        return f"({{{', '.join(name(c) for c in self.cut)}}}, {name(self.x)})"


def apply_codes(images: list[list[int]], word: list[int]) -> list[int]:
    """Image of a cyclic word under generator images, freely and cyclically reduced."""
    stack: list[int] = []
    for c in word:
        piece = images[c >> 1] if not c & 1 else [_inv(d) for d in reversed(images[c >> 1])]
        for d in piece:
            if stack and stack[-1] == _inv(d):
                stack.pop()
            else:
                stack.append(d)
    i, j = 0, len(stack) - 1
    while i < j and stack[i] == _inv(stack[j]):
        i += 1
        j -= 1
    return stack[i : j + 1]


@lru_cache(maxsize=None)
def type2_automorphisms(rank: int) -> tuple[WhiteheadAutomorphism, ...]:
    """All ``(A, x)`` automorphisms of F_rank, sorted by their encoding."""
    autos = []
    for x in range(2 * rank):
        others = [c for c in range(2 * rank) if c >> 1 != x >> 1]
        for mask in product((0, 1), repeat=len(others)):
            cut = tuple(sorted([x] + [c for c, bit in zip(others, mask) if bit]))
            autos.append(WhiteheadAutomorphism(2, x, cut))
    autos.sort()
    return tuple(autos)


def _codes(word: Word, alphabet: Alphabet) -> list[int]:
    return [2 * alphabet.index(g) + (0 if s > 0 else 1) for g, s in word.letters]


def _word(codes: list[int], alphabet: Alphabet) -> CyclicWord:
    return CyclicWord.from_letters((alphabet.names[c >> 1], -1 if c & 1 else 1) for c in codes)


def whitehead_minimize(r: CyclicWord, alphabet: Alphabet) -> tuple[CyclicWord, list[WhiteheadAutomorphism]]:
    """Greedy strict length reduction; the first shortening automorphism in encoding order wins."""
    rank = len(alphabet)
    autos = [(a, a.images(rank)) for a in type2_automorphisms(rank)]
    current = _codes(r, alphabet)
    applied = []
    improved = True
    while improved:
        improved = False
        for auto, images in autos:
            candidate = apply_codes(images, current)
            if len(candidate) < len(current):
                current = candidate
                applied.append(auto)
                improved = True
                break
    return _word(current, alphabet), applied


def replay(r: CyclicWord, alphabet: Alphabet, applied: list[WhiteheadAutomorphism]) -> CyclicWord:
    codes = _codes(r, alphabet)
    for auto in applied:
        codes = apply_codes(auto.images(len(alphabet)), codes)
    return _word(codes, alphabet)


@dataclass(frozen=True)
class Classification:
    exact_asdim: int
    class_tag: ClassTag
    minimal_relator: CyclicWord
    k: int
    free_rank: int
    applied: tuple[WhiteheadAutomorphism, ...] = ()

    def describe(self) -> str:
        return {
            ClassTag.FINITE_CYCLIC: "finite cyclic",
            ClassTag.FREE_OR_FREE_TIMES_FINITE_CYCLIC: "free or free product of free and finite cyclic",
            ClassTag.INDECOMPOSABLE_FACTOR: "free product with a freely indecomposable non-cyclic factor"
            if self.free_rank
            else "freely indecomposable, not cyclic",
        }[self.class_tag]


def classify(P: OneRelatorPresentation) -> Classification:
    r_min, applied = whitehead_minimize(P.relator, P.alphabet)
    n = len(P.alphabet)
    gens = r_min.generators()
    k = len(gens)
    if k == 1:
        (gen, e), = r_min.syllables
        if abs(e) >= 2:
            value, tag = (0, ClassTag.FINITE_CYCLIC) if n == 1 else (1, ClassTag.FREE_OR_FREE_TIMES_FINITE_CYCLIC)
        else:
            value, tag = (0 if n == 1 else 1), ClassTag.FREE_OR_FREE_TIMES_FINITE_CYCLIC
    else:
        value, tag = 2, ClassTag.INDECOMPOSABLE_FACTOR
    return Classification(value, tag, r_min, k, n - k, tuple(applied))


def boundary_note(c: Classification, user_asserts_hyperbolic_nonsplit: bool = False) -> str | None:
    """Informational boundary description; hyperbolicity is never checked."""
    if c.exact_asdim == 1:
        return "virtually free; if hyperbolic, the boundary is a Cantor set"
    if c.exact_asdim == 2 and user_asserts_hyperbolic_nonsplit:
        return (
            "assuming G is hyperbolic and does not split over a virtually cyclic subgroup, "
            "its boundary is one of: Menger curve, Sierpinski carpet, circle S^1"
        )
    return None
