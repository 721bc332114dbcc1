"""Input families: one-relator presentations, RAAG graphs and graphs of groups.

Presentation text grammar::

    presentation := "<" gens "|" word ">"
    gens         := ident ("," ident)*
    word         := term+
    term         := ident ("^" signed_int)?
    ident        := [a-z][a-z0-9_]*

``signed_int`` is a nonzero integer with an optional sign.  Whitespace between
tokens is ignored.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Union

from .errors import InputError, PresentationSyntaxError, SchemaError
from .words import Alphabet, CyclicWord, Word, cyclic_reduce, format_word

_TOKEN = re.compile(r"\s*(?:(?P<ident>[a-z][a-z0-9_]*)|(?P<int>[+-]?\d+)|(?P<punct>[<>|,^]))")


@dataclass(frozen=True)
class OneRelatorPresentation:
    alphabet: Alphabet
    relator: CyclicWord
    source: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.relator:
            raise InputError("trivial relator")
        stray = self.relator.generators() - set(self.alphabet)
        if stray:
            raise InputError(f"relator uses unknown generators {sorted(map(str, stray))}")

    def __str__(self) -> str:
        gens = ", ".join(str(g) for g in self.alphabet)
        return f"<{gens} | {format_word(self.relator)}>"


def _tokens(text: str):
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PresentationSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        start = m.start(kind)
        yield kind, m.group(kind), start
        pos = m.end()
    yield "end", "", n


class _Parser:
    def __init__(self, text: str):
        self.toks = list(_tokens(text))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str, value: str | None = None, expected: str | None = None):
        k, v, pos = self.toks[self.i]
        if k != kind or (value is not None and v != value):
            what = "end of input" if k == "end" else repr(v)
            raise PresentationSyntaxError(f"unexpected {what}", pos, expected or (repr(value) if value else kind))
        self.i += 1
        return v, pos


def parse_presentation(text: str) -> OneRelatorPresentation:
    """Parse ``<gens | word>`` and cyclically reduce the relator."""
    p = _Parser(text)
    p.take("punct", "<")
    gens = [p.take("ident", expected="generator name")[0]]
    while p.peek()[:2] == ("punct", ","):
        p.take("punct", ",")
        gens.append(p.take("ident", expected="generator name")[0])
    p.take("punct", "|", expected="',' or '|'")
    try:
        alphabet = Alphabet(gens)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    syllables = []
    while True:
        kind, value, pos = p.peek()
        if kind != "ident":
            if not syllables:
                raise PresentationSyntaxError("empty relator", pos, "generator name")
            break
        p.take("ident")
        if value not in alphabet:
            raise PresentationSyntaxError(f"unknown generator {value!r}", pos)
        exp = 1
        if p.peek()[:2] == ("punct", "^"):
            p.take("punct", "^")
            digits, dpos = p.take("int", expected="nonzero integer exponent")
            exp = int(digits)
            if exp == 0:
                raise PresentationSyntaxError("zero exponent", dpos, "nonzero integer exponent")
        syllables.append((value, exp))
    p.take("punct", ">", expected="'>'")
    p.take("end", expected="end of input")
    core, _ = cyclic_reduce(Word(syllables))
    if not core:
        raise InputError("trivial relator")
    return OneRelatorPresentation(alphabet, core, source=text)


@dataclass(frozen=True)
class RaagGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self) -> None:
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise SchemaError("duplicate vertex", v)
            seen.add(v)
        for e in self.edges:
            if len(e) != 2:
                raise SchemaError("loop edge", "-".join(sorted(e)))
            for v in e:
                if v not in seen:
                    raise SchemaError("edge references unknown vertex", v)

    @classmethod
    def build(cls, vertices, edges) -> "RaagGraph":
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    def neighbors(self, v: str) -> set[str]:
        return {w for e in self.edges if v in e for w in e if w != v}

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            u, w = tuple(e)
            adj[u].add(w)
            adj[w].add(u)
        return adj

    def full_subgraph(self, keep) -> "RaagGraph":
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        return RaagGraph(verts, frozenset(e for e in self.edges if e <= keep))

    def components(self) -> list["RaagGraph"]:
        adj = self.adjacency()
        seen: set[str] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            comps.append(self.full_subgraph(comp))
        return comps

    def to_json(self) -> dict:
        edges = sorted(sorted(e) for e in self.edges)
        return {"type": "raag", "vertices": list(self.vertices), "edges": edges}


def _load(obj: Union[str, dict]) -> dict:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise SchemaError("expected a JSON object")
    return obj


def parse_raag(obj: Union[str, dict]) -> RaagGraph:
    data = _load(obj)
    if data.get("type") != "raag":
        raise SchemaError('expected "type": "raag"')
    vertices = data.get("vertices")
    edges = data.get("edges", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) and v for v in vertices):
        raise SchemaError("vertices must be a list of nonempty strings")
    if not isinstance(edges, list):
        raise SchemaError("edges must be a list")
    seen = set()
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise SchemaError("edge must be a pair of vertex ids", str(e))
        u, v = e
        if u == v:
            raise SchemaError("loop edge", u)
        for x in e:
            if x not in vertices:
                raise SchemaError("edge references unknown vertex", x)
        key = frozenset(e)
        if key in seen:
            raise SchemaError("multi-edge", f"{u}-{v}")
        seen.add(key)
    return RaagGraph.build(vertices, edges)


@dataclass(frozen=True)
class GogVertex:
    id: str
    asdim: int | None = None
    presentation: OneRelatorPresentation | None = None
    raag: RaagGraph | None = None


@dataclass(frozen=True)
class GogEdge:
    id: str
    ends: tuple[str, str]
    asdim: int

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]


@dataclass(frozen=True)
class GraphOfGroups:
    vertices: tuple[GogVertex, ...]
    edges: tuple[GogEdge, ...]

    def __post_init__(self) -> None:
        ids = [v.id for v in self.vertices]
        if not ids:
            raise SchemaError("graph of groups has no vertices")
        if len(set(ids)) != len(ids):
            raise SchemaError("duplicate vertex id")
        eids = [e.id for e in self.edges]
        if len(set(eids)) != len(eids):
            raise SchemaError("duplicate edge id")
        for v in self.vertices:
            if v.asdim is not None and v.asdim < 0:
                raise SchemaError("negative asdim", v.id)
        for e in self.edges:
            if e.asdim < 0:
                raise SchemaError("negative asdim", e.id)
            for end in e.ends:
                if end not in ids:
                    raise SchemaError(f"dangling vertex reference {end!r}", e.id)
        if not self.is_connected():
            raise SchemaError("graph of groups is disconnected")

    def vertex(self, vid: str) -> GogVertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def is_connected(self) -> bool:
        ids = {v.id for v in self.vertices}
        adj: dict[str, set[str]] = {v: set() for v in ids}
        for e in self.edges:
            a, b = e.ends
            if a in adj and b in adj:
                adj[a].add(b)
                adj[b].add(a)
        start = min(ids)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        return seen == ids

    def to_json(self) -> dict:
        verts = []
        for v in self.vertices:
            item: dict[str, Any] = {"id": v.id}
            if v.presentation is not None:
                item["presentation"] = str(v.presentation)
            elif v.raag is not None:
                item["raag"] = v.raag.to_json()
            else:
                item["asdim"] = v.asdim
            verts.append(item)
        edges = [{"id": e.id, "ends": list(e.ends), "asdim": e.asdim} for e in self.edges]
        return {"type": "gog", "vertices": verts, "edges": edges}


def _nonneg_int(value: Any, element: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError("asdim must be an integer", element)
    if value < 0:
        raise SchemaError("negative asdim", element)
    return value


def parse_gog(obj: Union[str, dict]) -> GraphOfGroups:
    data = _load(obj)
    if data.get("type") != "gog":
        raise SchemaError('expected "type": "gog"')
    raw_vertices = data.get("vertices")
    raw_edges = data.get("edges", [])
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise SchemaError("vertices and edges must be lists")
    vertices = []
    for item in raw_vertices:
        if not isinstance(item, dict) or not isinstance(item.get("id"), str):
            raise SchemaError("vertex must be an object with a string id", str(item))
        vid = item["id"]
        kinds = [k for k in ("asdim", "presentation", "raag") if k in item]
        if len(kinds) != 1:
            raise SchemaError("vertex needs exactly one of asdim / presentation / raag", vid)
        kind = kinds[0]
        try:
            if kind == "asdim":
                vertices.append(GogVertex(vid, asdim=_nonneg_int(item["asdim"], vid)))
            elif kind == "presentation":
                vertices.append(GogVertex(vid, presentation=parse_presentation(item["presentation"])))
            else:
                vertices.append(GogVertex(vid, raag=parse_raag(item["raag"])))
        except SchemaError:
            raise
        except InputError as exc:
            raise SchemaError(str(exc), vid) from None
    edges = []
    for item in raw_edges:
        if not isinstance(item, dict) or not isinstance(item.get("id"), str):
            raise SchemaError("edge must be an object with a string id", str(item))
        eid = item["id"]
        ends = item.get("ends")
        if not (isinstance(ends, list) and len(ends) == 2 and all(isinstance(x, str) for x in ends)):
            raise SchemaError("ends must be a pair of vertex ids", eid)
        if "asdim" not in item:
            raise SchemaError("edge asdim missing", eid)
        edges.append(GogEdge(eid, (ends[0], ends[1]), _nonneg_int(item["asdim"], eid)))
    return GraphOfGroups(tuple(vertices), tuple(edges))
