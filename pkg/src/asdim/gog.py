"""Upper bound on asdim of the fundamental group of a finite graph of groups.

The derivation removes edges one at a time: first every edge outside the
spanning tree (an HNN step), then terminal tree edges (an amalgam step), until
a single vertex group remains.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from . import derivation as cite
from .classify import classify
from .derivation import Derivation, Rule, replay_bound
from .errors import InputError, InvariantViolation
from .presentation import GogEdge, GraphOfGroups
from .raag import raag_asdim


@dataclass(frozen=True)
class GogBound:
    bound: int
    derivation: Derivation
    spanning_tree: frozenset[str]


def resolve_vertex_asdims(g: GraphOfGroups) -> dict[str, int]:
    out = {}
    for v in g.vertices:
        if v.asdim is not None:
            out[v.id] = v.asdim
        elif v.presentation is not None:
            out[v.id] = classify(v.presentation).exact_asdim
        elif v.raag is not None:
            out[v.id] = raag_asdim(v.raag)[0]
        else:
            raise InputError(f"{v.id}: unresolved vertex group")
    return out


def closed_form_bound(g: GraphOfGroups, vertex_asdim: dict[str, int] | None = None) -> int:
    vertex_asdim = vertex_asdim or resolve_vertex_asdims(g)
    return max(list(vertex_asdim.values()) + [e.asdim + 1 for e in g.edges])


def bfs_spanning_tree(g: GraphOfGroups) -> frozenset[str]:
    """BFS tree from the smallest vertex id, scanning incident edges by id."""
    root = min(v.id for v in g.vertices)
    edges = sorted(g.edges, key=lambda e: e.id)
    seen = {root}
    tree = set()
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for e in edges:
            if e.is_loop or x not in e.ends:
                continue
            y = e.ends[1] if e.ends[0] == x else e.ends[0]
            if y not in seen:
                seen.add(y)
                tree.add(e.id)
                queue.append(y)
    return frozenset(tree)


def random_spanning_tree(g: GraphOfGroups, rng: random.Random) -> frozenset[str]:
    parent = {v.id: v.id for v in g.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = [e for e in sorted(g.edges, key=lambda e: e.id) if not e.is_loop]
    rng.shuffle(edges)
    tree = set()
    for e in edges:
        a, b = find(e.ends[0]), find(e.ends[1])
        if a != b:
            parent[a] = b
            tree.add(e.id)
    return frozenset(tree)


def _check_tree(g: GraphOfGroups, tree: frozenset[str]) -> None:
    by_id = {e.id: e for e in g.edges}
    if not tree <= by_id.keys():
        raise InputError(f"spanning tree names unknown edges {sorted(tree - by_id.keys())}")
    if len(tree) != len(g.vertices) - 1:
        raise InputError("spanning tree has the wrong number of edges")
    parent = {v.id: v.id for v in g.vertices}
    for eid in tree:
        a, b = by_id[eid].ends
        while parent[a] != a:
            a = parent[a]
        while parent[b] != b:
            b = parent[b]
        if a == b:
            raise InputError(f"spanning tree contains a cycle through {eid}")
        parent[a] = b


def gog_bound(
    g: GraphOfGroups,
    spanning_tree: frozenset[str] | None = None,
    rng: random.Random | None = None,
) -> GogBound:
    """Bound with its edge-removal derivation.

    ``rng`` randomizes which admissible edge is removed at each step; without
    it the smallest edge id goes first.
    """
    asdims = resolve_vertex_asdims(g)
    tree = frozenset(spanning_tree) if spanning_tree is not None else bfs_spanning_tree(g)
    _check_tree(g, tree)
    root = min(asdims)
    pick = (lambda xs: rng.choice(xs)) if rng else (lambda xs: xs[0])

    remaining = sorted(g.edges, key=lambda e: e.id)
    alive = set(asdims)
    steps: list[tuple[str, GogEdge, str | None]] = []
    while True:
        non_tree = [e for e in remaining if e.id not in tree]
        if non_tree:
            e = pick(non_tree)
            steps.append(("hnn", e, None))
            remaining.remove(e)
            continue
        if not remaining:
            break
        degree = {v: 0 for v in alive}
        for e in remaining:
            for end in e.ends:
                degree[end] += 1
        terminal = []
        for e in remaining:
            leaves = [v for v in e.ends if v != root and degree[v] == 1]
            if leaves:
                terminal.append((e, leaves[0]))
        e, u = terminal[0] if not rng else rng.choice(terminal)
        steps.append(("amalgam", e, u))
        remaining.remove(e)
        alive.discard(u)
    if alive != {root}:
        raise InvariantViolation(f"edge removal left vertices {sorted(alive)}")

    node = Derivation(Rule.LEAF, cite.DECLARED, asdims[root], {"label": f"vertex {root}", "vertex": root})
    for kind, e, u in reversed(steps):
        payload = {"label": f"remove edge {e.id}", "edge": e.id, "ends": list(e.ends), "edge_asdim": e.asdim}
        if kind == "hnn":
            node = Derivation(Rule.NON_TREE_EDGE_HNN, cite.HNN_INEQUALITY, max(node.bound, e.asdim + 1), payload, (node,))
        else:
            leaf = Derivation(Rule.LEAF, cite.DECLARED, asdims[u], {"label": f"vertex {u}", "vertex": u})
            payload["vertex"] = u
            node = Derivation(
                Rule.TREE_EDGE_AMALGAM,
                cite.AMALGAM_INEQUALITY,
                max(node.bound, leaf.bound, e.asdim + 1),
                payload,
                (node, leaf),
            )
    closed = closed_form_bound(g, asdims)
    citation = node.citation if node.rule is Rule.LEAF else f"{node.citation}; {cite.GOG_BOUND}"
    payload = node.payload | {"spanning_tree": sorted(tree), "closed_form": closed}
    node = Derivation(node.rule, citation, node.bound, payload, node.children)
    replayed = replay_bound(node)
    if replayed != closed:
        raise InvariantViolation(f"derivation bound {replayed} differs from closed form {closed}")
    return GogBound(closed, node, tree)


def gog_exactness(g: GraphOfGroups) -> int | None:
    """The exact value when every edge group has smaller asdim than the largest vertex group."""
    asdims = resolve_vertex_asdims(g)
    n = max(asdims.values())
    edge_max = max((e.asdim for e in g.edges), default=-1)
    return n if edge_max < n else None
