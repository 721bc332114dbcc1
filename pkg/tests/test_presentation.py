import json

import pytest

from asdim.derivation import Derivation, Rule, emit_certificate, parse_certificate, replay_bound
from asdim.errors import InputError, PresentationSyntaxError, SchemaError
from asdim.magnus import analyze
from asdim.presentation import parse_gog, parse_presentation, parse_raag
from asdim.words import format_word


def test_parse_round_trip():
    P = parse_presentation("<a, b | a b a^-1 b^-1>")
    assert [str(g) for g in P.alphabet] == ["a", "b"]
    assert format_word(P.relator) == "a b a^-1 b^-1"
    assert str(P) == "<a, b | a b a^-1 b^-1>"
    assert parse_presentation(str(P)) == P


def test_parse_reduces_relator():
    assert format_word(parse_presentation("<a,b|b a b^-1 a a^-1>").relator) == "a"
    assert format_word(parse_presentation("<a|a^2 a^3>").relator) == "a^5"
    assert format_word(parse_presentation("<a , b|a^+2   b^-3>").relator) == "a^2 b^-3"


@pytest.mark.parametrize(
    "text, pos",
    [
        ("<a, b | a ^ >", 12),
        ("<a, b | >", 8),
        ("a, b | a>", 0),
        ("<a, b | a c>", 10),
        ("<a, b | a^0>", 10),
        ("<a, b | a b", 11),
        ("<a, b | a> junk", 11),
        ("<a; b | a>", 2),
        ("<A | A>", 1),
    ],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation(text)
    assert info.value.position == pos
    assert isinstance(info.value, InputError)


def test_semantic_errors():
    with pytest.raises(InputError, match="trivial"):
        parse_presentation("<a, b | a b b^-1 a^-1>")
    with pytest.raises(InputError):
        parse_presentation("<a, a | a>")


def test_parse_raag():
    g = parse_raag('{"type": "raag", "vertices": ["u", "v", "w"], "edges": [["u", "v"]]}')
    assert g.vertices == ("u", "v", "w")
    assert g.neighbors("u") == {"v"}
    assert parse_raag(g.to_json()) == g


@pytest.mark.parametrize(
    "doc, element",
    [
        ({"type": "raag", "vertices": ["u"], "edges": [["u", "u"]]}, "u"),
        ({"type": "raag", "vertices": ["u", "v"], "edges": [["u", "v"], ["v", "u"]]}, "v-u"),
        ({"type": "raag", "vertices": ["u"], "edges": [["u", "z"]]}, "z"),
        ({"type": "raag", "vertices": ["u", "u"], "edges": []}, "u"),
    ],
)
def test_raag_schema_errors(doc, element):
    with pytest.raises(SchemaError) as info:
        parse_raag(doc)
    assert info.value.element == element


def test_raag_bad_json():
    with pytest.raises(SchemaError):
        parse_raag("{not json")
    with pytest.raises(SchemaError):
        parse_raag({"type": "gog", "vertices": []})


GOG = {
    "type": "gog",
    "vertices": [
        {"id": "A", "asdim": 2},
        {"id": "B", "presentation": "<a, b | a b a^-1 b^-1>"},
        {"id": "C", "raag": {"type": "raag", "vertices": ["p", "q"], "edges": []}},
    ],
    "edges": [{"id": "e1", "ends": ["A", "B"], "asdim": 1}, {"id": "e2", "ends": ["B", "C"], "asdim": 0}],
}


def test_parse_gog():
    g = parse_gog(json.dumps(GOG))
    assert [v.id for v in g.vertices] == ["A", "B", "C"]
    assert g.vertex("B").presentation is not None
    assert g.vertex("C").raag.vertices == ("p", "q")
    assert parse_gog(g.to_json()) == g


@pytest.mark.parametrize(
    "patch, element",
    [
        (lambda d: d["edges"].append({"id": "e3", "ends": ["A", "Z"], "asdim": 0}), "e3"),
        (lambda d: d["vertices"][0].update(asdim=-1), "A"),
        (lambda d: d["edges"][0].update(asdim=-2), "e1"),
        (lambda d: d["vertices"][0].update(presentation="<a | a>"), "A"),
        (lambda d: d["vertices"][1].update(presentation="<a | >"), "B"),
        (lambda d: d["edges"].pop(), None),
        (lambda d: d["edges"][0].pop("asdim"), "e1"),
    ],
)
def test_gog_schema_errors(patch, element):
    doc = json.loads(json.dumps(GOG))
    patch(doc)
    with pytest.raises(SchemaError) as info:
        parse_gog(doc)
    assert info.value.element == element


def test_certificate_round_trip():
    _, d = analyze(parse_presentation("<a, b, c | a b c a b^10 a^-2 c^-1>"))
    text = emit_certificate(d)
    back = parse_certificate(text)
    assert back == d
    assert emit_certificate(back) == text
    assert replay_bound(back) == d.bound


def test_certificate_errors():
    with pytest.raises(SchemaError):
        parse_certificate("[1, 2")
    with pytest.raises(SchemaError):
        parse_certificate('{"rule": "Nope", "citation": "", "bound": 1}')
    with pytest.raises(SchemaError):
        parse_certificate('{"rule": "Leaf", "bound": 1}')


def test_tampered_certificate_fails_replay():
    from asdim.errors import InvariantViolation

    leaf = Derivation(Rule.MATSNEV_BASE, "", 2, {"length": 4})
    assert replay_bound(leaf) == 2
    with pytest.raises(InvariantViolation):
        replay_bound(Derivation(Rule.MATSNEV_BASE, "", 1, {"length": 4}))
    node = Derivation(Rule.CASE1_HNN, "", 1, {"free_subgroup_asdim": 1}, (leaf,))
    with pytest.raises(InvariantViolation):
        replay_bound(node)
