import json
import random

import pytest

from asdim.corpus import gog_corpus
from asdim.derivation import Rule, replay_bound
from asdim.errors import InputError
from asdim.gog import (
    bfs_spanning_tree,
    closed_form_bound,
    gog_bound,
    gog_exactness,
    random_spanning_tree,
    resolve_vertex_asdims,
)
from asdim.presentation import parse_gog


def gog(vertices, edges):
    return parse_gog(
        {
            "type": "gog",
            "vertices": [{"id": k, **({"asdim": v} if isinstance(v, int) else v)} for k, v in vertices.items()],
            "edges": [{"id": e, "ends": [a, b], "asdim": s} for e, (a, b, s) in edges.items()],
        }
    )


def test_single_vertex():
    g = gog({"v": 3}, {})
    res = gog_bound(g)
    assert res.bound == 3 and res.derivation.rule is Rule.LEAF
    assert gog_exactness(g) == 3


def test_amalgam_over_z():
    # two surface-like vertex groups over a cyclic edge group
    g = gog({"A": 2, "B": 2}, {"e": ("A", "B", 1)})
    res = gog_bound(g)
    assert res.bound == 2
    assert res.derivation.rule is Rule.TREE_EDGE_AMALGAM
    assert gog_exactness(g) == 2


def test_loop_is_hnn():
    g = gog({"v": 1}, {"loop": ("v", "v", 1)})
    res = gog_bound(g)
    assert res.bound == 2 and res.derivation.rule is Rule.NON_TREE_EDGE_HNN
    assert gog_exactness(g) is None


def test_cycle_with_presentations_and_raag():
    g = gog(
        {
            "A": {"presentation": "<a, b | a b a^-1 b^-1>"},
            "B": {"raag": {"type": "raag", "vertices": ["p", "q", "r"], "edges": [["p", "q"], ["q", "r"], ["r", "p"]]}},
            "C": 0,
        },
        {"e1": ("A", "B", 1), "e2": ("B", "C", 0), "e3": ("C", "A", 0)},
    )
    assert resolve_vertex_asdims(g) == {"A": 2, "B": 3, "C": 0}
    res = gog_bound(g)
    assert res.bound == 3 == closed_form_bound(g)
    assert res.spanning_tree == bfs_spanning_tree(g) == {"e1", "e3"}
    assert res.derivation.rule is Rule.NON_TREE_EDGE_HNN
    assert res.derivation.payload["edge"] == "e2"
    assert gog_exactness(g) == 3


def test_explicit_tree_validation():
    g = gog({"A": 1, "B": 1, "C": 1}, {"e1": ("A", "B", 0), "e2": ("B", "C", 0), "e3": ("A", "C", 0)})
    assert gog_bound(g, frozenset({"e2", "e3"})).spanning_tree == {"e2", "e3"}
    with pytest.raises(InputError):
        gog_bound(g, frozenset({"e1"}))
    with pytest.raises(InputError):
        gog_bound(g, frozenset({"e1", "zz"}))
    g4 = gog({"A": 1, "B": 1, "C": 1, "D": 1}, {"e1": ("A", "B", 0), "e2": ("B", "A", 0), "e3": ("C", "D", 0), "e4": ("B", "C", 0)})
    with pytest.raises(InputError):
        gog_bound(g4, frozenset({"e1", "e2", "e3"}))


def test_certificate_is_json_and_replays():
    g = gog_corpus(3, 1)[0]
    res = gog_bound(g)
    d = json.loads(json.dumps(res.derivation.to_dict()))
    assert d["payload"]["closed_form"] == res.bound
    assert replay_bound(res.derivation) == res.bound


def test_random_corpus_all_trees():
    rng = random.Random(99)
    for g in gog_corpus(99, 60):
        closed = closed_form_bound(g)
        for _ in range(3):
            tree = random_spanning_tree(g, rng)
            res = gog_bound(g, tree, rng=rng)
            assert replay_bound(res.derivation) == closed
        asd = resolve_vertex_asdims(g)
        fires = max((e.asdim for e in g.edges), default=-1) < max(asd.values())
        assert (gog_exactness(g) is not None) == fires
