"""Empirical checks of the tree projection, separation and partition statements on finite balls."""
from __future__ import annotations

import json
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any

from ..errors import InputError
from . import britton as bt
from .ball import BsCayley, CayleyBall
from .britton import TreeVertex
from .proof_sets import ProofSets


@dataclass
class LabReport:
    check: str
    params: dict
    pairs_tested: int
    min_certified_distance: int | None
    violations: int
    runtime_ms: int | None = None
    examples: list = field(default_factory=list)  # a few violating items, not serialized
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "check": self.check,
            "params": self.params,
            "pairs_tested": self.pairs_tested,
            "min_certified_distance": self.min_certified_distance,
            "violations": self.violations,
            "runtime_ms": self.runtime_ms if timing else None,
        }
        out.update(self.extra)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"


def _bs(ball: CayleyBall) -> BsCayley:
    if not isinstance(ball.group, BsCayley):
        raise InputError("this check needs a BS(m,n) ball")
    return ball.group


def _ball_params(ball: CayleyBall) -> dict:
    return {"group": ball.group.name, "radius": ball.radius, "pad": ball.padded_radius, "vertices": len(ball)}


def _require_separation_hypothesis(R: int, r: int) -> None:
    if not (4 < 4 * R <= r):
        raise InputError(f"need 4 < 4R <= r, got R={R}, r={r}")


def _ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def verify_projection(ball: CayleyBall) -> LabReport:
    """The tree projection is simplicial and 1-Lipschitz, and |xG| = l(x).

    a-edges must stay at one tree vertex and t-edges must move to an adjacent
    one; every pair (x, x b) with b in B(pad) inside the ball must satisfy
    tree distance <= ||b||.
    """
    start = time.perf_counter()
    cayley = _bs(ball)
    grp = cayley.grp
    proj = {x: bt.tree_project(x, grp) for x in ball.order}
    violations, tested, examples = 0, 0, []
    for x in ball.order:
        px = proj[x]
        if px.level != x.length:
            violations += 1
            examples.append(("level", str(x)))
        for i, y in ball.neighbors(x):
            tested += 1
            dist = bt.tree_distance(px, proj[y])
            if dist != (0 if i < 2 else 1):
                violations += 1
                examples.append(("edge", str(x), cayley.generators[i]))
        for y, k in ball.translate_pad(x).items():
            if y in proj:
                tested += 1
                if bt.tree_distance(px, proj[y]) > k:
                    violations += 1
                    examples.append(("lipschitz", str(x), str(y)))
    return LabReport("verify-lemma25", _ball_params(ball), tested, None, violations, _ms(start), examples[:10])


def verify_tail_bound(ball: CayleyBall) -> LabReport:
    """||w|| >= d(a^s, N) if the last t-letter is t, >= d(a^s, phi(N)) if it is t^-1.

    d(a^s, N) is the least norm of a^c with c = s mod m; the ball holds every
    element of norm <= radius, so a class with no short enough member in the
    ball is a genuine violation.
    """
    start = time.perf_counter()
    grp = _bs(ball).grp
    m, n = abs(grp.m), abs(grp.n)
    best_m: dict[int, int] = {}
    best_n: dict[int, int] = {}
    for x in ball.order:
        if not x.tail:
            k = ball.norms[x]
            best_m.setdefault(x.g % m, k)  # BFS order: first hit is the least norm
            best_n.setdefault(x.g % n, k)
    violations, tested, examples = 0, 0, []
    slack = None
    for x in ball.order:
        if not x.tail:
            continue
        tested += 1
        e, s = x.tail[-1]
        d = best_m.get(s % m) if e == 1 else best_n.get(s % n)
        norm = ball.norms[x]
        if d is None or norm < d:
            violations += 1
            examples.append(str(x))
        else:
            slack = norm - d if slack is None else min(slack, norm - d)
    report = LabReport("verify-lemma27", _ball_params(ball), tested, None, violations, _ms(start), examples[:10])
    report.params["min_slack"] = slack
    return report


def _sample(points: set, cap: int, rng: random.Random) -> list:
    ordered = sorted(points)
    return ordered if len(ordered) <= cap else sorted(rng.sample(ordered, cap))


def verify_separation(
    ball: CayleyBall,
    R: int,
    r: int,
    sample_cap: int = 200,
    seed: int = 0,
    levels: tuple[int, ...] | None = None,
    per_level: int = 8,
    sets: ProofSets | None = None,
) -> LabReport:
    """Distinct tree vertices u, u' at levels in {0, r, 2r, ...} have d(M_R^u, M_R^u') >= 2R.

    Per level, the lexicographically smallest ``per_level`` vertices with a
    nonempty M_R^u in the ball are used; each set is sampled down to
    ``sample_cap`` points with a seeded generator.
    """
    start = time.perf_counter()
    _bs(ball)
    _require_separation_hypothesis(R, r)
    if ball.padded_radius < 2 * R - 1:
        raise InputError(f"insufficient pad {ball.padded_radius}: certifying d >= {2 * R} needs pad >= {2 * R - 1}")
    levels = levels if levels is not None else (0, r)
    if any(lv % r for lv in levels):
        raise InputError(f"levels {levels} must be multiples of r={r}")
    sets = sets or ProofSets(ball, R, r)
    rng = random.Random(seed)

    by_u: dict[tuple, set] = defaultdict(set)
    for x, p in sets.points.items():
        for i, d in enumerate(p.dist):
            if d == R and i * r in levels:
                by_u[p.path[: i * r]].add(x)
    chosen: list[tuple] = []
    for lv in sorted(levels):
        us = sorted(u for u in by_u if len(u) == lv)
        chosen += us[:per_level]
    samples = {u: _sample(by_u[u], sample_cap, rng) for u in chosen}

    tested, violations, examples = 0, 0, []
    cap = ball.padded_radius + 1
    min_d = None
    for a_idx, u in enumerate(chosen):
        for x in samples[u]:
            near = ball.translate_pad(x)
            for v in chosen[a_idx + 1 :]:
                for y in samples[v]:
                    tested += 1
                    d = near.get(y, cap)
                    min_d = d if min_d is None else min(min_d, d)
                    if d < 2 * R:
                        violations += 1
                        examples.append((str(x), str(y), d))
    params = _ball_params(ball) | {
        "R": R,
        "r": r,
        "levels": list(levels),
        "sample_cap": sample_cap,
        "seed": seed,
        "tree_vertices": len(chosen),
        "points_sampled": sum(len(s) for s in samples.values()),
    }
    return LabReport("verify-prop26", params, tested, min_d, violations, _ms(start), examples[:10])


def verify_partition(ball: CayleyBall, R: int, r: int, sets: ProofSets | None = None) -> LabReport:
    """The cells V_r^u and E_R cover the ball, meet only in M_R^v, and Z is their union.

    For cells V_r^u, V_r^v with u <= v and |v| = |u| + r the intersection must be
    exactly M_R^v; V_r^G meets E_R exactly in M_R; all other pairs are disjoint.
    The points lying in two or more cells must be (union of M_R^u) u M_R.
    """
    start = time.perf_counter()
    _bs(ball)
    _require_separation_hypothesis(R, r)
    sets = sets or ProofSets(ball, R, r)
    observed: dict[tuple, set] = defaultdict(set)
    expected: dict[tuple, set] = defaultdict(set)
    multi, seen_cells = set(), set()
    violations, examples = 0, []
    for x, p in sets.points.items():
        cells = sets.cells(x)
        seen_cells.update(cells)
        if not cells:
            violations += 1
            examples.append(("uncovered", str(x)))
        if len(cells) >= 2:
            multi.add(x)
        for i, c in enumerate(cells):
            for c2 in cells[i + 1 :]:
                observed[(c, c2)].add(x)
        if p.dist[0] == R:
            expected[(("E",), ("V", ()))].add(x)
        for i in range(1, len(p.dist)):
            if p.dist[i] == R:
                expected[(("V", p.path[: (i - 1) * r]), ("V", p.path[: i * r]))].add(x)
    for key in set(observed) | set(expected):
        if observed.get(key, set()) != expected.get(key, set()):
            violations += 1
            examples.append(("intersection", str(key)[:120]))
    if multi != sets.Z():
        violations += 1
        examples.append(("Z", len(multi ^ sets.Z())))
    params = _ball_params(ball) | {"R": R, "r": r, "cells": len(seen_cells)}
    tested = len(sets.points) + len(set(observed) | set(expected)) + 1
    return LabReport("verify-partition", params, tested, None, violations, _ms(start), examples[:10])


def sampled_tree_vertices(sets: ProofSets, level: int, cap: int = 8) -> list[TreeVertex]:
    return sets.tree_vertices(level)[:cap]
