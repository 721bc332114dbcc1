"""Finite balls in Cayley graphs, built by breadth-first search from the identity.

Three groups are supported: BS(m, n) with elements as right normal forms, Z^2
with coordinate pairs and the free group F2 with reduced words.  BFS layers
give exact word norms.  Distances between ball elements use left invariance,
d(x, y) = ||x^-1 y||: ``y`` is within ``k <= pad`` of ``x`` exactly when
``y = x b`` for some ``b`` in the exact ball B(pad), so a miss certifies
d(x, y) >= pad + 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Protocol

from ..errors import InputError, ResourceLimitExceeded
from . import britton as bt
from .britton import BrittonForm, BsGroup

DEFAULT_VERTEX_CAP = 2_000_000
Element = Hashable


class CayleyGroup(Protocol):
    name: str
    generators: tuple[str, ...]

    def identity(self) -> Element: ...
    def step(self, x: Element, i: int) -> Element: ...
    def multiply(self, x: Element, y: Element) -> Element: ...


class BsCayley:
    """BS(m, n) with generators a, a^-1, t, t^-1."""

    generators = ("a", "a^-1", "t", "t^-1")

    def __init__(self, grp: BsGroup):
        self.grp = grp
        self.name = f"bs:{grp.m}:{grp.n}"

    def identity(self) -> BrittonForm:
        return bt.IDENTITY

    def step(self, x: BrittonForm, i: int) -> BrittonForm:
        if i < 2:
            return bt.mul_a(x, 1 - 2 * i, self.grp)
        return bt.mul_t(x, 1 if i == 2 else -1)

    def multiply(self, x: BrittonForm, y: BrittonForm) -> BrittonForm:
        return bt.multiply(x, y, self.grp)


class Z2Cayley:
    name = "z2"
    generators = ("x", "x^-1", "y", "y^-1")
    _moves = ((1, 0), (-1, 0), (0, 1), (0, -1))

    def identity(self) -> tuple[int, int]:
        return (0, 0)

    def step(self, p: tuple[int, int], i: int) -> tuple[int, int]:
        dx, dy = self._moves[i]
        return (p[0] + dx, p[1] + dy)

    def multiply(self, p, q):
        return (p[0] + q[0], p[1] + q[1])


class F2Cayley:
    """Reduced words as tuples of letter codes: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1."""

    name = "f2"
    generators = ("a", "a^-1", "b", "b^-1")

    def identity(self) -> tuple[int, ...]:
        return ()

    def step(self, w: tuple[int, ...], i: int) -> tuple[int, ...]:
        if w and w[-1] == i ^ 1:
            return w[:-1]
        return w + (i,)

    def multiply(self, w, v):
        k = 0
        while k < min(len(w), len(v)) and w[len(w) - 1 - k] == v[k] ^ 1:
            k += 1
        return w[: len(w) - k] + v[k:]


def parse_group(spec: str) -> CayleyGroup:
    """``bs:m:n``, ``z2`` or ``f2``."""
    if spec == "z2":
        return Z2Cayley()
    if spec == "f2":
        return F2Cayley()
    parts = spec.split(":")
    if len(parts) == 3 and parts[0] == "bs":
        try:
            return BsCayley(BsGroup(int(parts[1]), int(parts[2])))
        except ValueError as exc:
            raise InputError(f"bad group {spec!r}: {exc}") from None
    raise InputError(f"unknown group {spec!r}; expected bs:m:n, z2 or f2")


@dataclass
class CayleyBall:
    group: CayleyGroup
    radius: int
    padded_radius: int
    norms: dict = field(repr=False)
    order: list = field(repr=False)
    pad_ball: list = field(repr=False, default_factory=list)

    @property
    def vertices(self) -> list:
        """Ball elements in BFS order."""
        return self.order

    def __len__(self) -> int:
        return len(self.order)

    def __contains__(self, x: object) -> bool:
        return x in self.norms

    def neighbors(self, x: Element) -> list[tuple[int, Element]]:
        """``(generator index, x s)`` for the generators whose product stays in the ball."""
        out = []
        for i in range(len(self.group.generators)):
            y = self.group.step(x, i)
            if y in self.norms:
                out.append((i, y))
        return out

    def translate_pad(self, x: Element) -> dict:
        """``{x b: ||b||}`` over B(pad)."""
        mul = self.group.multiply
        return {mul(x, b): k for b, k in self.pad_ball}

    def certified_distance(self, x: Element, y: Element) -> int:
        """Exact d(x, y) when at most pad, otherwise the certified lower bound pad + 1."""
        return self.translate_pad(x).get(y, self.padded_radius + 1)


def bfs(group: CayleyGroup, radius: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> tuple[dict, list]:
    start = group.identity()
    norms = {start: 0}
    order = [start]
    frontier = [start]
    step = group.step
    gens = range(len(group.generators))
    for k in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for i in gens:
                y = step(x, i)
                if y not in norms:
                    norms[y] = k
                    nxt.append(y)
        if len(norms) > vertex_cap:
            raise ResourceLimitExceeded(f"ball of radius {radius} exceeds the vertex cap {vertex_cap} at radius {k}")
        order.extend(nxt)
        frontier = nxt
    return norms, order


def build_ball(group: CayleyGroup, radius: int, pad: int = 0, vertex_cap: int = DEFAULT_VERTEX_CAP) -> CayleyBall:
    if radius < 0 or pad < 0:
        raise InputError("radius and pad must be nonnegative")
    norms, order = bfs(group, radius, vertex_cap)
    if pad <= radius:
        pad_ball = [(b, norms[b]) for b in order if norms[b] <= pad]
    else:
        pnorms, porder = bfs(group, pad, vertex_cap)
        pad_ball = [(b, pnorms[b]) for b in porder]
    return CayleyBall(group, radius, pad, norms, order, pad_ball)
