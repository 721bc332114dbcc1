"""Vertex-level realizations of the sets used in the HNN partition argument.

With H = N u phi(N) = {a^k : m | k or n | k}:

* M_R = {x : d(x, H) = R} and E_R = {x : d(x, H) <= R};
* for a tree vertex u with representative g_u, M_R^u and E_R^u are the points
  x over the subtree T^u with d(g_u^-1 x, H) = R, resp. <= R;
* V_r (vertices) = {x : l(x) <= r-1, d(x, H) >= R}
  together with {x : l(x) >= r, d(g_w^-1 x, H) <= R} where w is the level-r
  ancestor of xG, and V_r^u = {x over T^u : g_u^-1 x in V_r}.

If x = a^s1 t^e1 ... a^sk t^ek a^g is a left normal form and u is the
ancestor of xG at level j, then g_u^-1 x = a^s(j+1) t^e(j+1) ... a^g, so every
set above is decided by d(., H) on a few suffixes of the left normal form.

d(y, H) <= R is decided exactly from the ball B(R): y = h b with h in H and
b in B(R) iff y and b have the same right-normal-form tail and their leading
a-powers differ by a multiple of m or n.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from ..errors import InputError
from . import britton as bt
from .ball import BsCayley, CayleyBall, bfs
from .britton import BrittonForm, LeftForm, TreeVertex


class DistanceToH:
    """d(y, N u phi(N)) clipped at R + 1 (meaning "more than R")."""

    def __init__(self, cayley: BsCayley, R: int):
        self.R = R
        self.m, self.n = abs(cayley.grp.m), abs(cayley.grp.n)
        norms, order = bfs(cayley, R)
        index: dict = defaultdict(list)
        for b in order:
            index[b.tail].append((b.g, norms[b]))
        self._index = dict(index)

    def __call__(self, y: BrittonForm) -> int:
        best = self.R + 1
        for g, k in self._index.get(y.tail, ()):
            diff = y.g - g
            if k < best and (diff % self.m == 0 or diff % self.n == 0):
                best = k
        return best


@dataclass(frozen=True)
class PointData:
    path: tuple
    dist: tuple[int, ...]  # d(g_u^-1 x, H) clipped, for the ancestors u at levels 0, r, 2r, ...


class ProofSets:
    def __init__(self, ball: CayleyBall, R: int, r: int):
        if not isinstance(ball.group, BsCayley):
            raise InputError("proof sets need a BS(m,n) ball")
        if R < 0 or r < 1:
            raise InputError("need R >= 0 and r >= 1")
        if ball.radius < R:
            raise InputError(f"ball too small: radius {ball.radius}, need at least {R}")
        self.ball, self.R, self.r = ball, R, r
        self.grp = ball.group.grp
        dist = DistanceToH(ball.group, R)
        self.points: dict[BrittonForm, PointData] = {}
        for x in ball.order:
            lf = bt.left_normal_form(x, self.grp)
            path = lf.syllables
            ds = [dist(x)]
            for j in range(r, len(path) + 1, r):
                ds.append(dist(bt.from_left(LeftForm(path[j:], lf.g), self.grp)))
            self.points[x] = PointData(path, tuple(ds))

    def d_H(self, x: BrittonForm) -> int:
        return self.points[x].dist[0]

    def M_R(self) -> set:
        return {x for x, p in self.points.items() if p.dist[0] == self.R}

    def E_R(self) -> set:
        return {x for x, p in self.points.items() if p.dist[0] <= self.R}

    def _over(self, u: TreeVertex):
        j = u.level
        if j % self.r:
            raise InputError(f"tree vertex level {j} is not a multiple of r={self.r}")
        for x, p in self.points.items():
            if p.path[:j] == u.path:
                yield x, p, j // self.r

    def M_R_u(self, u: TreeVertex) -> set:
        return {x for x, p, i in self._over(u) if p.dist[i] == self.R}

    def E_R_u(self, u: TreeVertex) -> set:
        return {x for x, p, i in self._over(u) if p.dist[i] <= self.R}

    def in_V(self, p: PointData, i: int) -> bool:
        """Whether g_u^-1 x lies in V_r, for u the ancestor of xG at level i*r."""
        rel = len(p.path) - i * self.r
        if rel <= self.r - 1:
            return p.dist[i] >= self.R
        return p.dist[i + 1] <= self.R

    def V_r_u(self, u: TreeVertex) -> set:
        return {x for x, p, i in self._over(u) if self.in_V(p, i)}

    def tree_vertices(self, level: int) -> list[TreeVertex]:
        """Vertices at ``level`` lying under some ball element, sorted by path."""
        return sorted({TreeVertex(p.path[:level]) for p in self.points.values() if len(p.path) >= level})

    def cells(self, x: BrittonForm) -> list[tuple]:
        """Partition cells containing x: ``("E",)`` for E_R and ``("V", path)`` for V_r^u."""
        p = self.points[x]
        out = []
        if p.dist[0] <= self.R:
            out.append(("E",))
        for i in range(len(p.dist)):
            if self.in_V(p, i):
                out.append(("V", p.path[: i * self.r]))
        return out

    def Z(self) -> set:
        """(union of M_R^u over levels r, 2r, ...) together with M_R."""
        out = self.M_R()
        for x, p in self.points.items():
            if any(d == self.R for d in p.dist[1:]):
                out.add(x)
        return out
