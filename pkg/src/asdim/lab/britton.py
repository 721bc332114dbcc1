"""Britton normal forms in BS(m, n) = <a, t | t a^m t^-1 = a^n>.

The base group is Z = <a>, N = mZ and phi(a^m) = a^n, so t a^m = a^n t and
t^-1 a^n = a^m t^-1.  Coset representatives are {0, ..., |m|-1} for Z/mZ and
{0, ..., |n|-1} for Z/nZ.

Right normal form: ``a^g t^e1 a^s1 ... t^ek a^sk`` with ``s_i`` reduced mod
|m| when ``e_i = 1`` and mod |n| when ``e_i = -1``.
Left normal form: ``a^s1 t^e1 ... a^sk t^ek a^g`` with ``s_i`` reduced mod
|n| when ``e_i = 1`` and mod |m| when ``e_i = -1``.
Both forms are unique and have the same number k of t-letters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ..errors import InputError
from ..words import Word

Syllable = tuple[int, int]


@dataclass(frozen=True)
class BsGroup:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m == 0 or self.n == 0:
            raise InputError("BS(m, n) needs nonzero m and n")

    def __str__(self) -> str:
        return f"BS({self.m},{self.n})"


class BrittonForm(NamedTuple):
    """Right normal form: ``g`` is the power of a in front, ``tail`` the ``(e, s)`` syllables."""

    g: int
    tail: tuple[Syllable, ...]

    @property
    def length(self) -> int:
        return len(self.tail)

    def __str__(self) -> str:
        parts = [f"a^{self.g}"] if self.g else []
        for e, s in self.tail:
            parts.append("t" if e == 1 else "t^-1")
            if s:
                parts.append(f"a^{s}")
        return " ".join(parts) or "1"


IDENTITY = BrittonForm(0, ())


class LeftForm(NamedTuple):
    """Left normal form: ``syllables`` are ``(e, s)`` read as ``a^s t^e``, then trailing ``a^g``."""

    syllables: tuple[Syllable, ...]
    g: int


class TreeVertex(NamedTuple):
    """The coset ``wG`` as its path of ``(e, s)`` pairs from the base vertex."""

    path: tuple[Syllable, ...]

    @property
    def level(self) -> int:
        return len(self.path)

    def is_prefix_of(self, other: "TreeVertex") -> bool:
        return other.path[: len(self.path)] == self.path


def _split(c: int, mod: int) -> tuple[int, int]:
    """``c = mod * q + s`` with ``0 <= s < |mod|``."""
    s = c % abs(mod)
    return (c - s) // mod, s


def mul_a(w: BrittonForm, c: int, grp: BsGroup) -> BrittonForm:
    """Right multiplication by ``a^c``; the excess over a coset rep moves left through t."""
    if c == 0:
        return w
    tail = list(w.tail)
    carry = c
    i = len(tail) - 1
    while carry and i >= 0:
        e, s = tail[i]
        if e == 1:
            q, rep = _split(s + carry, grp.m)
            carry = grp.n * q
        else:
            q, rep = _split(s + carry, grp.n)
            carry = grp.m * q
        tail[i] = (e, rep)
        i -= 1
    if carry and i < 0:
        return BrittonForm(w.g + carry, tuple(tail))
    return BrittonForm(w.g, tuple(tail))


def mul_t(w: BrittonForm, e: int) -> BrittonForm:
    """Right multiplication by ``t^e``, cancelling a pinch ``t^-e a^0 t^e``."""
    if w.tail and w.tail[-1] == (-e, 0):
        return BrittonForm(w.g, w.tail[:-1])
    return BrittonForm(w.g, w.tail + ((e, 0),))


def _letters(word) -> Iterable[tuple[str, int]]:
    syllables = word.syllables if isinstance(word, Word) else word
    for gen, exp in syllables:
        if gen not in ("a", "t"):
            raise InputError(f"generator {gen!r} is not a or t")
        yield gen, exp


def multiply_word(w: BrittonForm, word, grp: BsGroup) -> BrittonForm:
    for gen, exp in _letters(word):
        if gen == "a":
            w = mul_a(w, exp, grp)
        else:
            e = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                w = mul_t(w, e)
    return w


def britton_normalize(word, grp: BsGroup) -> BrittonForm:
    """Right normal form of a word over {a, t} (a Word or ``(gen, exp)`` pairs)."""
    return multiply_word(IDENTITY, word, grp)


def to_syllables(w: BrittonForm) -> list[tuple[str, int]]:
    out = [("a", w.g)] if w.g else []
    for e, s in w.tail:
        out.append(("t", e))
        if s:
            out.append(("a", s))
    return out


def to_word(w: BrittonForm) -> Word:
    return Word(to_syllables(w))


def multiply(x: BrittonForm, y: BrittonForm, grp: BsGroup) -> BrittonForm:
    return multiply_word(x, to_syllables(y), grp)


def inverse(x: BrittonForm, grp: BsGroup) -> BrittonForm:
    return britton_normalize([(g, -e) for g, e in reversed(to_syllables(x))], grp)


def left_normal_form(x: BrittonForm, grp: BsGroup) -> LeftForm:
    syl: list[Syllable] = []
    g = 0
    for gen, exp in to_syllables(x):
        if gen == "a":
            g += exp
            continue
        e = exp
        # a^g t = a^s t a^(m q) with g = n q + s; a^g t^-1 = a^s t^-1 a^(n q) with g = m q + s
        if e == 1:
            q, s = _split(g, grp.n)
            shifted = grp.m * q
        else:
            q, s = _split(g, grp.m)
            shifted = grp.n * q
        if s == 0 and syl and syl[-1][0] == -e:
            _, prev = syl.pop()
            g = prev + shifted
        else:
            syl.append((e, s))
            g = shifted
    return LeftForm(tuple(syl), g)


def from_left(lf: LeftForm, grp: BsGroup) -> BrittonForm:
    word = []
    for e, s in lf.syllables:
        word += [("a", s), ("t", e)]
    word.append(("a", lf.g))
    return britton_normalize(word, grp)


def tree_project(x: BrittonForm, grp: BsGroup) -> TreeVertex:
    """The Bass-Serre tree vertex ``xG``."""
    return TreeVertex(left_normal_form(x, grp).syllables)


def coset_representative(u: TreeVertex, grp: BsGroup) -> BrittonForm:
    """``g_u``: the element whose left normal form is ``u``'s path with trivial trailing part."""
    return from_left(LeftForm(u.path, 0), grp)


def tree_distance(u: TreeVertex, v: TreeVertex) -> int:
    k = 0
    for p, q in zip(u.path, v.path):
        if p != q:
            break
        k += 1
    return len(u.path) + len(v.path) - 2 * k
