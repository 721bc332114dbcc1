import networkx as nx
import pytest

from asdim.derivation import Rule, replay_bound
from asdim.errors import InputError
from asdim.presentation import RaagGraph
from asdim.raag import hnn_decompose, maximum_clique, raag_asdim, sim, val
from oracles import clique_number


def G(vertices, edges=""):
    return RaagGraph.build(list(vertices), [tuple(e) for e in edges.split()])


def from_nx(h) -> RaagGraph:
    return RaagGraph.build([str(v) for v in h.nodes], [(str(u), str(v)) for u, v in h.edges])


@pytest.mark.parametrize(
    "g, value",
    [
        (G("a"), 1),
        (G("abc"), 1),
        (G("ab", "ab"), 2),
        (G("abcd", "ab bc cd"), 2),
        (G("abcde", "ab bc cd de ea"), 2),
        (G("abcd", "ab ac ad bc bd cd"), 4),
        (G("abcd", "ab bc ca cd"), 3),
    ],
)
def test_examples(g, value):
    got, d = raag_asdim(g)
    assert got == value == replay_bound(d)


def test_complete_graph_is_leaf():
    _, d = raag_asdim(G("abc", "ab bc ca"))
    assert d.rule is Rule.VAL_BOUND and d.payload["val"] == 2


def test_disconnected_splits():
    _, d = raag_asdim(G("abcd", "ab cd"))
    assert d.rule is Rule.FREE_PRODUCT_SPLIT and len(d.children) == 2


def test_hnn_decompose():
    g = G("abcd", "ab bc cd")
    dec = hnn_decompose(g, "b")
    assert dec.gamma_prime.vertices == ("a", "c", "d")
    assert dec.gamma_prime.edges == {frozenset("cd")}
    assert dec.link.vertices == ("a", "c") and not dec.link.edges
    with pytest.raises(InputError):
        hnn_decompose(g, "z")
    with pytest.raises(InputError):
        hnn_decompose(G("a"), "a")


def test_empty_graph_rejected():
    with pytest.raises(InputError):
        raag_asdim(RaagGraph((), frozenset()))


def test_atlas_against_oracle():
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == 0:
            continue
        g = from_nx(h)
        value, d = raag_asdim(g)
        assert value == clique_number(g.vertices, g.edges) == replay_bound(d)
        assert sim(g) <= val(g) + 1
        clique = maximum_clique(g)
        assert all(frozenset((u, v)) in g.edges for i, u in enumerate(clique) for v in clique[i + 1 :])


def test_monotone_under_subgraphs():
    for h in nx.graph_atlas_g()[200:400]:
        g = from_nx(h)
        for v in g.vertices:
            sub = g.full_subgraph(set(g.vertices) - {v})
            if sub.vertices:
                assert sim(sub) <= sim(g)
