"""Recursive asdim upper bound for one-relator groups.

At each step the presentation is simplified by the first applicable rule:
split off generators missing from the relator, stop on one generator, on a
letter occurring exactly once, or on a relator of length at most 4;
otherwise rewrite around an exponent-sum-zero letter (an HNN splitting over a
finitely generated free group) or, failing that, embed into a presentation
that has such a letter.  Every recursive child has a strictly shorter relator.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import derivation as cite
from .derivation import Derivation, Rule
from .errors import DepthLimitExceeded, InputError, InvariantViolation
from .presentation import OneRelatorPresentation
from .words import (
    Alphabet,
    CyclicWord,
    Generator,
    IndexedGenerator,
    Substitution,
    Word,
    apply_substitution,
    cyclic_reduce,
    exponent_sum,
    format_word,
    occurrence_count,
    occurring_generators,
)


@dataclass(frozen=True)
class Case1Result:
    rewritten: CyclicWord
    m: int
    M: int
    stable_letter: Generator
    rotation: int
    alphabet: Alphabet
    subgroup_basis_X: tuple[IndexedGenerator, ...]
    subgroup_basis_Y: tuple[IndexedGenerator, ...]


@dataclass(frozen=True)
class Case2Result:
    p: CyclicWord
    eps_a: int
    eps_b: int
    t: str
    x: str
    alphabet: Alphabet
    substitution: Substitution

    @property
    def t_occurs(self) -> bool:
        return self.t in self.p.generators()


def _default_alphabet(r: Word) -> Alphabet:
    order: list = []
    for g, _ in r.syllables:
        if g not in order:
            order.append(g)
    return Alphabet(order)


def _rotation_start(letters, a) -> int:
    n = len(letters)
    for i in range(n):
        if letters[i].generator == a and letters[i - 1].generator != a:
            return i
    raise InputError(f"no syllable of {a} bounded by other letters")


def case1_rewrite(r: CyclicWord, a: Generator, alphabet: Alphabet | None = None) -> Case1Result:
    """Rewrite ``r`` (with zero exponent sum in ``a``) over the conjugates ``s[j] = a^j s a^-j``."""
    alphabet = alphabet or _default_alphabet(r)
    occurring = occurring_generators(r)
    if a not in occurring:
        raise InputError(f"{a} does not occur in the relator")
    if exponent_sum(r, a) != 0:
        raise InputError(f"exponent sum of {a} is nonzero")
    if len(occurring) < 2:
        raise InputError("need at least two occurring generators")

    letters = r.letters
    rot = _rotation_start(letters, a)
    rotated = letters[rot:] + letters[:rot]
    j = 0
    out = []
    for gen, sign in rotated:
        if gen == a:
            j += sign
        else:
            out.append((IndexedGenerator(gen, j), sign))
    if j != 0:
        raise InvariantViolation("running exponent did not return to zero")
    if len(Word.from_letters(out)) != len(out):
        raise InvariantViolation("rewritten relator is not freely reduced")
    rewritten = CyclicWord.from_letters(out)
    supers = {g.superscript for g, _ in rewritten.syllables}
    m, M = min(supers), max(supers)
    if not (M - m > 0 and m <= 0 <= M):
        raise InvariantViolation(f"superscript range violates M-m>0, m<=0<=M: m={m}, M={M}")
    if len(rewritten) > len(r) - 2:
        raise InvariantViolation("rewritten relator not shorter by at least 2")

    # word-level round trip: s[j] -> a^j s a^-j recovers the rotated relator
    back = []
    for g, e in rewritten.syllables:
        back += [(a, g.superscript), (g.base, e), (a, -g.superscript)]
    if Word(back) != Word.from_letters(rotated):
        raise InvariantViolation("rewrite does not round-trip to the rotated relator")

    bases = [s for s in alphabet if s != a]
    child = Alphabet(IndexedGenerator(s, k) for s in bases for k in range(m, M + 1))
    X = tuple(IndexedGenerator(s, k) for s in bases for k in range(m, M))
    Y = tuple(IndexedGenerator(s, k) for s in bases for k in range(m + 1, M + 1))
    return Case1Result(rewritten, m, M, a, rot, child, X, Y)


def _fresh(name: str, taken) -> str:
    used = {str(g) for g in taken}
    if name not in used:
        return name
    k = 1
    while f"{name}_{k}" in used:
        k += 1
    return f"{name}_{k}"


def case2_embed(r: CyclicWord, a: Generator, b: Generator, alphabet: Alphabet | None = None) -> Case2Result:
    """Substitute ``a -> t^-eps(b) x``, ``b -> t^eps(a)`` and cyclically reduce."""
    alphabet = alphabet or _default_alphabet(r)
    if a == b:
        raise InputError("case 2 needs two distinct letters")
    eps_a, eps_b = exponent_sum(r, a), exponent_sum(r, b)
    if eps_a == 0 or eps_b == 0:
        raise InputError("case 2 needs nonzero exponent sums")
    t = _fresh("t", alphabet)
    x = _fresh("x", list(alphabet) + [t])
    rest = [s for s in alphabet if s not in (a, b)]
    target = Alphabet([t, x] + rest)
    images = {s: Word.power(s, 1) for s in rest}
    images[a] = Word([(t, -eps_b), (x, 1)])
    images[b] = Word.power(t, eps_a)
    phi = Substitution(alphabet, target, images)
    p, _ = cyclic_reduce(apply_substitution(phi, r))
    if exponent_sum(p, t) != 0:
        raise InvariantViolation("exponent sum of t in the embedded relator is nonzero")
    if x not in p.generators():
        raise InvariantViolation("x does not occur in the embedded relator")
    return Case2Result(p, eps_a, eps_b, t, x, target, phi)


def _node_payload(P: OneRelatorPresentation) -> dict:
    return {
        "label": str(P),
        "generators": [str(g) for g in P.alphabet],
        "relator": format_word(P.relator),
        "length": len(P.relator),
    }


def analyze(P: OneRelatorPresentation, depth_limit: int | None = None) -> tuple[int, Derivation]:
    """Upper bound on asdim of ``P`` together with its derivation tree."""
    if not P.relator:
        raise InputError("empty relator")
    if depth_limit is None:
        depth_limit = len(P.relator)
    d = _analyze(P, depth_limit)
    return d.bound, d


def _analyze(P: OneRelatorPresentation, budget: int) -> Derivation:
    r, S = P.relator, P.alphabet
    payload = _node_payload(P)
    occurring = occurring_generators(r)

    missing = [s for s in S if s not in occurring]
    if missing:
        H = OneRelatorPresentation(Alphabet(s for s in S if s in occurring), r)
        child = _analyze(H, budget)
        payload["free_generators"] = [str(s) for s in missing]
        return Derivation(Rule.TRIVIAL_LETTER_SPLIT, cite.FREE_PRODUCT, max(child.bound, 1), payload, (child,))

    if len(S) == 1:
        payload["order"] = abs(exponent_sum(r, S.names[0]))
        return Derivation(Rule.FINITE_CYCLIC, cite.FINITE_CYCLIC, 0, payload)

    for s in S:
        # a single syllable s^k with |k| >= 2 does not make G free (e.g. a^2 b^-3)
        if occurrence_count(r, s) == 1 and abs(exponent_sum(r, s)) == 1:
            payload["letter"] = str(s)
            return Derivation(Rule.FREE_GROUP_DETECT, cite.FREE_BY_SINGLE_OCCURRENCE, 1, payload)

    if len(r) <= 4:
        return Derivation(Rule.MATSNEV_BASE, cite.MATSNEV_BOUND, -(-len(r) // 2), payload)

    if budget <= 0:
        raise DepthLimitExceeded(f"depth limit exhausted at {P}")

    zero = [s for s in S if exponent_sum(r, s) == 0]
    if zero:
        node = _case1_node(P, zero[0], payload, budget, limit=len(r) - 2)
        return node

    a, b = S.names[0], S.names[1]
    emb = case2_embed(r, a, b, S)
    payload.update(
        {
            "a": str(a),
            "b": str(b),
            "eps_a": emb.eps_a,
            "eps_b": emb.eps_b,
            "substitution": {str(k): format_word(v) for k, v in emb.substitution.images.items()},
            "p": format_word(emb.p),
            "t": emb.t,
            "x": emb.x,
            "t_occurs": emb.t_occurs,
        }
    )
    gamma = OneRelatorPresentation(emb.alphabet, emb.p)
    if emb.t_occurs:
        inner = _case1_node(gamma, emb.t, _node_payload(gamma), budget, limit=len(r) - 1)
        return Derivation(Rule.CASE2_EMBED, cite.MAGNUS_EMBEDDING, inner.bound, payload, (inner,))
    if len(emb.p) > len(r) - 1:
        raise InvariantViolation("embedded relator without t is not shorter")
    child_P = OneRelatorPresentation(Alphabet(s for s in emb.alphabet if s != emb.t), emb.p)
    child = _analyze(child_P, budget - 1)
    return Derivation(Rule.CASE2_EMBED, f"{cite.MAGNUS_EMBEDDING}; {cite.FREE_PRODUCT}", max(1, child.bound), payload, (child,))


def _case1_node(P: OneRelatorPresentation, a: Generator, payload: dict, budget: int, limit: int) -> Derivation:
    res = case1_rewrite(P.relator, a, P.alphabet)
    if len(res.rewritten) > limit:
        raise InvariantViolation(f"rewritten relator length {len(res.rewritten)} exceeds {limit}")
    child_P = OneRelatorPresentation(res.alphabet, res.rewritten)
    child = _analyze(child_P, budget - 1)
    payload.update(
        {
            "letter": str(a),
            "rotation": res.rotation,
            "m": res.m,
            "M": res.M,
            "rewritten": format_word(res.rewritten),
            "X": [str(g) for g in res.subgroup_basis_X],
            "Y": [str(g) for g in res.subgroup_basis_Y],
            "stable_letter_map": "s[j] -> s[j+1]",
            "free_subgroup_asdim": 1,
        }
    )
    citation = f"{cite.EXPONENT_ZERO_SPLITTING}; {cite.FREIHEITSSATZ}; {cite.HNN_INEQUALITY}"
    return Derivation(Rule.CASE1_HNN, citation, max(child.bound, 2), payload, (child,))
