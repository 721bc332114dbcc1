"""Free-group words: reduction, cyclic reduction, exponent sums, substitutions.

Generators are arbitrary hashable identifiers (plain strings for parsed input,
:class:`IndexedGenerator` for the conjugate generators introduced by the
Magnus rewriting).  Words are stored as syllable runs ``(generator, exponent)``
and exposed letter by letter.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence

Generator = Hashable


class Letter(NamedTuple):
    generator: Generator
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


@dataclass(frozen=True)
class IndexedGenerator:
    """The conjugate ``a^j s a^-j`` of a base generator, written ``s[j]``."""

    base: Generator
    superscript: int

    def __str__(self) -> str:
        return f"{self.base}[{self.superscript}]"


class Alphabet:
    """An ordered list of distinct generators."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[Generator]):
        names = tuple(names)
        index = {}
        for i, name in enumerate(names):
            if isinstance(name, str) and not name:
                raise ValueError("empty generator name")
            if name in index:
                raise ValueError(f"duplicate generator: {name}")
            index[name] = i
        self.names = names
        self._index = index

    def index(self, gen: Generator) -> int:
        return self._index[gen]

    def __contains__(self, gen: object) -> bool:
        return gen in self._index

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({[str(n) for n in self.names]})"

    def sorted(self, gens: Iterable[Generator]) -> list:
        return sorted(gens, key=self.index)


def _merge(syllables: Iterable[tuple[Generator, int]]) -> tuple[tuple[Generator, int], ...]:
    stack: list[list] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple((g, e) for g, e in stack)


class Word:
    """A freely reduced word, stored as maximal syllables ``(gen, exp)``."""

    __slots__ = ("syllables", "_len")

    def __init__(self, syllables: Iterable[tuple[Generator, int]] = ()):
        self.syllables = _merge(syllables)
        self._len = sum(abs(e) for _, e in self.syllables)

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[Generator, int]]) -> "Word":
        return cls((g, s) for g, s in letters)

    @classmethod
    def power(cls, gen: Generator, exp: int) -> "Word":
        return cls([(gen, exp)])

    @property
    def letters(self) -> tuple[Letter, ...]:
        out = []
        for gen, exp in self.syllables:
            sign = 1 if exp > 0 else -1
            out.extend([Letter(gen, sign)] * abs(exp))
        return tuple(out)

    def __len__(self) -> int:
        return self._len

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.syllables * n)

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.syllables))

    def generators(self) -> set:
        return {g for g, _ in self.syllables}

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


class CyclicWord(Word):
    """A cyclically reduced word: freely reduced with non-inverse end letters."""

    __slots__ = ()

    def __init__(self, syllables: Iterable[tuple[Generator, int]] = ()):
        super().__init__(syllables)
        s = self.syllables
        if len(s) >= 2 and s[0][0] == s[-1][0] and (s[0][1] > 0) != (s[-1][1] > 0):
            raise ValueError(f"not cyclically reduced: {format_word(self)}")

    @classmethod
    def of(cls, word: Word) -> "CyclicWord":
        return cls(word.syllables)

    def rotate(self, k: int) -> "CyclicWord":
        """Rotation by ``k`` letters to the left."""
        letters = self.letters
        if not letters:
            return self
        k %= len(letters)
        return CyclicWord.from_letters(letters[k:] + letters[:k])


def format_word(word: Word) -> str:
    if not word.syllables:
        return "1"
    parts = []
    for gen, exp in word.syllables:
        parts.append(str(gen) if exp == 1 else f"{gen}^{exp}")
    return " ".join(parts)


def free_reduce(raw: Sequence[tuple[Generator, int]]) -> Word:
    """Freely reduce a sequence of signed letters."""
    return Word.from_letters(raw)


def cyclic_reduce(w: Word) -> tuple[CyclicWord, Word]:
    """Return ``(core, conjugator)`` with ``w == conjugator * core * conjugator^-1``."""
    letters = list(w.letters)
    i, j = 0, len(letters) - 1
    while i < j and letters[i].generator == letters[j].generator and letters[i].sign == -letters[j].sign:
        i += 1
        j -= 1
    conjugator = Word.from_letters(letters[:i])
    core = Word.from_letters(letters[i : j + 1])
    return CyclicWord.of(core), conjugator


def exponent_sum(r: Word, s: Generator) -> int:
    return sum(e for g, e in r.syllables if g == s)


def occurrence_count(r: CyclicWord, s: Generator) -> int:
    """Number of maximal ``s``-syllables of ``r`` read as a cyclic word."""
    syl = r.syllables
    count = sum(1 for g, _ in syl if g == s)
    if count and len(syl) > 1 and syl[0][0] == s and syl[-1][0] == s:
        count -= 1
    return count


def occurring_generators(r: Word) -> set:
    return r.generators()


@dataclass(frozen=True)
class Substitution:
    """A homomorphism between free groups given by generator images."""

    domain: Alphabet
    codomain: Alphabet
    images: Mapping[Generator, Word]

    def __post_init__(self) -> None:
        for gen in self.domain:
            if gen not in self.images:
                raise ValueError(f"no image for generator {gen}")
        for gen, img in self.images.items():
            stray = img.generators() - set(self.codomain)
            if stray:
                raise ValueError(f"image of {gen} uses generators outside the codomain: {sorted(map(str, stray))}")

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Substitution":
        return cls(alphabet, alphabet, {g: Word.power(g, 1) for g in alphabet})


def apply_substitution(phi: Substitution, w: Word) -> Word:
    out: list = []
    for gen, exp in w.syllables:
        if gen not in phi.domain:
            raise ValueError(f"generator {gen} not in substitution domain")
        img = phi.images[gen]
        piece = img.syllables if exp > 0 else img.inverse().syllables
        out.extend(piece * abs(exp))
    return Word(out)
