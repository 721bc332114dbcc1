"""asdim of right-angled Artin groups: the clique number of the defining graph."""
from __future__ import annotations

from dataclasses import dataclass

from . import derivation as cite
from .derivation import Derivation, Rule
from .errors import InputError, InvariantViolation
from .presentation import RaagGraph


@dataclass(frozen=True)
class RaagDecomposition:
    removed_vertex: str
    gamma_prime: RaagGraph
    link: RaagGraph


def _require_vertices(g: RaagGraph) -> None:
    if not g.vertices:
        raise InputError("graph has no vertices")


def maximum_clique(g: RaagGraph) -> list[str]:
    """A maximum clique, found by Bron-Kerbosch with pivoting and size pruning."""
    _require_vertices(g)
    adj = g.adjacency()
    best: list[str] = []

    def expand(clique: list[str], cand: set[str], excl: set[str]) -> None:
        nonlocal best
        if not cand and not excl:
            if len(clique) > len(best):
                best = list(clique)
            return
        if len(clique) + len(cand) <= len(best):
            return
        pivot = max(cand | excl, key=lambda u: (len(adj[u] & cand), u))
        for v in sorted(cand - adj[pivot]):
            expand(clique + [v], cand & adj[v], excl & adj[v])
            cand = cand - {v}
            excl = excl | {v}

    expand([], set(g.vertices), set())
    return sorted(best)


def sim(g: RaagGraph) -> int:
    """Largest n such that g contains the complete graph K_n."""
    return len(maximum_clique(g))


def val(g: RaagGraph) -> int:
    _require_vertices(g)
    adj = g.adjacency()
    return max(len(nbrs) for nbrs in adj.values())


def hnn_decompose(g: RaagGraph, u: str) -> RaagDecomposition:
    """A(g) as an HNN extension of A(g - u) over A(link(u)), with stable letter u."""
    if u not in g.vertices:
        raise InputError(f"vertex {u!r} not in graph")
    if len(g.vertices) < 2:
        raise InputError("cannot decompose a single-vertex graph")
    rest = [v for v in g.vertices if v != u]
    return RaagDecomposition(u, g.full_subgraph(rest), g.full_subgraph(g.neighbors(u)))


def _is_complete(g: RaagGraph) -> bool:
    n = len(g.vertices)
    return len(g.edges) == n * (n - 1) // 2


def _peel_vertex(g: RaagGraph) -> str:
    """Lexicographically first vertex lying in some maximum clique."""
    n = sim(g)
    adj = g.adjacency()
    for v in sorted(g.vertices):
        sub = g.full_subgraph(adj[v])
        if sub.vertices and sim(sub) == n - 1:
            return v
    raise AssertionError("no vertex lies in a maximum clique")  # pragma: no cover


def _derive(g: RaagGraph) -> Derivation:
    payload = {"label": _label(g), "vertices": list(g.vertices), "edges": sorted(sorted(e) for e in g.edges)}
    comps = g.components()
    if len(comps) > 1:
        kids = tuple(_derive(c) for c in comps)
        return Derivation(Rule.FREE_PRODUCT_SPLIT, cite.FREE_PRODUCT, max(k.bound for k in kids), payload, kids)
    if _is_complete(g):
        n = len(g.vertices)
        payload.update({"val": n - 1, "lower_bound": f"Z^{n} subgroup"})
        return Derivation(Rule.VAL_BOUND, cite.RAAG_COMPLETE, n, payload)
    u = _peel_vertex(g)
    dec = hnn_decompose(g, u)
    rest, link = _derive(dec.gamma_prime), _derive(dec.link)
    payload.update({"removed_vertex": u, "link": list(dec.link.vertices)})
    return Derivation(Rule.CLIQUE_PEEL, cite.HNN_INEQUALITY, max(rest.bound, link.bound + 1), payload, (rest, link))


def _label(g: RaagGraph) -> str:
    edges = " ".join("-".join(sorted(e)) for e in sorted(sorted(e) for e in g.edges))
    return f"V={{{','.join(g.vertices)}}} E={{{edges}}}"


def raag_asdim(g: RaagGraph) -> tuple[int, Derivation]:
    _require_vertices(g)
    d = _derive(g)
    d = Derivation(d.rule, f"{d.citation}; {cite.RAAG_CLIQUE}", d.bound, d.payload, d.children)
    value = sim(g)
    if d.bound != value:
        raise InvariantViolation(f"derivation bound {d.bound} differs from clique number {value}")
    return value, d
