"""Derivation trees and their JSON certificate format.

A certificate node is ``{"rule", "citation", "bound", "payload", "children"}``.
Every internal node's bound is recomputable from its children and payload
(see :func:`replay_bound`), so a certificate can be audited without rerunning
the engine that produced it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .errors import InvariantViolation, SchemaError


class Rule(str, Enum):
    FREE_PRODUCT_SPLIT = "FreeProductSplit"
    FREE_GROUP_DETECT = "FreeGroupDetect"
    FINITE_CYCLIC = "FiniteCyclic"
    MATSNEV_BASE = "MatsnevBase"
    CASE1_HNN = "Case1HNN"
    CASE2_EMBED = "Case2Embed"
    TRIVIAL_LETTER_SPLIT = "TrivialLetterSplit"
    CLIQUE_PEEL = "CliquePeel"
    VAL_BOUND = "ValBound"
    TREE_EDGE_AMALGAM = "TreeEdgeAmalgam"
    NON_TREE_EDGE_HNN = "NonTreeEdgeHNN"
    LEAF = "Leaf"


# Fixed citation labels; grep-able in emitted certificates.
HNN_INEQUALITY = "HNN inequality: asdim G*_N <= max{asdim G, asdim N + 1}"
FREE_PRODUCT = "free product: asdim A*B = max{asdim A, asdim B}"
AMALGAM_INEQUALITY = "Dranishnikov amalgam: asdim A*_C B <= max{asdim A, asdim B, asdim C + 1}"
EXPONENT_ZERO_SPLITTING = "Magnus-Moldavanskii rewriting: exponent-sum-zero letter gives G = G1*_F with F free"
MAGNUS_EMBEDDING = "Magnus embedding into a one-relator group with an exponent-sum-zero letter"
MATSNEV_BOUND = "Matsnev base: asdim G <= ceil(|r|/2)"
FREIHEITSSATZ = "Freiheitssatz"
FREE_BY_SINGLE_OCCURRENCE = "single occurrence: relator is primitive, G is free"
FINITE_CYCLIC = "one generator: G is finite cyclic"
RAAG_CLIQUE = "RAAG: asdim A(Gamma) = clique number of Gamma"
RAAG_COMPLETE = "complete graph: A(K_n) = Z^n, asdim = Val + 1 = n"
GOG_BOUND = "graph of groups: asdim <= max{asdim G_v, asdim G_e + 1}"
DECLARED = "declared value"
ONE_RELATOR_EXACT = "one-relator trichotomy after Whitehead minimization: k = 1 gives asdim 0 or 1, k >= 2 gives 2"


@dataclass(frozen=True)
class Derivation:
    rule: Rule
    citation: str
    bound: int
    payload: dict = field(default_factory=dict)
    children: tuple["Derivation", ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rule", Rule(self.rule))
        object.__setattr__(self, "children", tuple(self.children))

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def to_dict(self) -> dict[str, Any]:
        return {
            "rule": self.rule.value,
            "citation": self.citation,
            "bound": self.bound,
            "payload": self.payload,
            "children": [c.to_dict() for c in self.children],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Derivation":
        try:
            return cls(
                rule=Rule(data["rule"]),
                citation=data["citation"],
                bound=data["bound"],
                payload=data.get("payload", {}),
                children=tuple(cls.from_dict(c) for c in data.get("children", [])),
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise SchemaError(f"malformed certificate node: {exc}") from None


def emit_certificate(d: Derivation) -> str:
    return json.dumps(d.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_certificate(text: str) -> Derivation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid certificate JSON: {exc}") from None
    return Derivation.from_dict(data)


def _child_bounds(d: Derivation) -> list[int]:
    return [replay_bound(c) for c in d.children]


def replay_bound(d: Derivation) -> int:
    """Recompute the bound of ``d`` bottom-up from leaves and payloads.

    Raises :class:`InvariantViolation` if any node's recorded bound differs
    from the recomputed one.
    """
    kids = _child_bounds(d)
    rule = d.rule
    p = d.payload
    if rule in (Rule.LEAF, Rule.FINITE_CYCLIC, Rule.FREE_GROUP_DETECT, Rule.MATSNEV_BASE, Rule.VAL_BOUND):
        if kids:
            raise InvariantViolation(f"{rule.value} node must be a leaf")
        expected = {
            Rule.FINITE_CYCLIC: 0,
            Rule.FREE_GROUP_DETECT: 1,
        }.get(rule, d.bound)
        if rule is Rule.MATSNEV_BASE:
            expected = -(-p["length"] // 2)
        elif rule is Rule.VAL_BOUND:
            expected = p["val"] + 1
    elif rule is Rule.FREE_PRODUCT_SPLIT:
        expected = max(kids)
    elif rule is Rule.TRIVIAL_LETTER_SPLIT:
        expected = max(kids + [1])
    elif rule is Rule.CASE1_HNN:
        expected = max(kids + [p["free_subgroup_asdim"] + 1])
    elif rule is Rule.CASE2_EMBED:
        expected = max(kids) if p["t_occurs"] else max(kids + [1])
    elif rule is Rule.CLIQUE_PEEL:
        expected = max(kids[0], kids[1] + 1)
    elif rule is Rule.TREE_EDGE_AMALGAM:
        expected = max(kids + [p["edge_asdim"] + 1])
    elif rule is Rule.NON_TREE_EDGE_HNN:
        expected = max(kids + [p["edge_asdim"] + 1])
    else:  # pragma: no cover
        raise InvariantViolation(f"unknown rule {rule}")
    if expected != d.bound:
        raise InvariantViolation(f"{rule.value} node records bound {d.bound}, replay gives {expected}")
    return expected


def render(d: Derivation, indent: int = 0) -> list[str]:
    """Human-readable tree, two spaces per level."""
    label = d.payload.get("label")
    head = f"{'  ' * indent}{d.rule.value} [bound {d.bound}]"
    if label:
        head += f" {label}"
    lines = [head]
    for child in d.children:
        lines.extend(render(child, indent + 1))
    return lines
