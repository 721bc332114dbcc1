"""Uniformly bounded covers of finite Cayley balls and their statistics at one scale.

* Z^2: bricks 6R wide and 4R high, alternate rows shifted by 3R.  An R-ball
  meets at most two rows and cannot sit on a vertical seam in both, so it
  meets at most 3 bricks; a brick has l1 diameter 10R - 2.
* F2: bands of 2R levels; a band is cut into cones by the ancestor R levels
  above the band's top.  Points of one band in different cones are more than
  2R apart, so an R-ball meets at most 2 cells.
* BS(m, n): the same band/cone construction pulled back from the Bass-Serre
  tree.  Cells contain whole pieces of cosets, so their diameter grows with
  the ball and is reported as an upper bound only.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import asdict, dataclass
from typing import Callable, Hashable

from ..errors import InputError
from . import britton as bt
from .ball import BsCayley, CayleyBall, F2Cayley, Z2Cayley, bfs


@dataclass
class Cover:
    ball: CayleyBall
    cells: dict[Hashable, list]
    R: int
    d_bound: int | None
    kind: str

    def membership(self) -> dict:
        out: dict = defaultdict(list)
        for key, pts in self.cells.items():
            for x in pts:
                out[x].append(key)
        return out


@dataclass
class CoverStats:
    sets: int
    ord: int
    r_multiplicity: int
    max_diameter: int
    diameter_exact: bool
    lebesgue_lower: int
    lebesgue_upper: int | None
    d_bound: int | None

    def to_dict(self) -> dict:
        return asdict(self)


def _cells_by(ball: CayleyBall, key: Callable) -> dict:
    cells: dict = defaultdict(list)
    for x in ball.order:
        cells[key(x)].append(x)
    return dict(cells)


def brick_cover(ball: CayleyBall, R: int) -> Cover:
    w, h, shift = 6 * R, 4 * R, 3 * R

    def key(p):
        row = p[1] // h
        return (row, (p[0] + (row % 2) * shift) // w)

    return Cover(ball, _cells_by(ball, key), R, 10 * R, "bricks")


def _band_key(level: int, path, R: int):
    D = 2 * R
    k = level // D
    anc = max(0, k * D - R)
    return (k, tuple(path[:anc]))


def cone_cover(ball: CayleyBall, R: int) -> Cover:
    return Cover(ball, _cells_by(ball, lambda w: _band_key(len(w), w, R)), R, 10 * R, "cones")


def tree_band_cover(ball: CayleyBall, R: int) -> Cover:
    grp = ball.group.grp

    def key(x):
        path = bt.tree_project(x, grp).path
        return _band_key(len(path), path, R)

    return Cover(ball, _cells_by(ball, key), R, None, "tree-bands")


def greedy_cover(ball: CayleyBall, R: int) -> Cover:
    """The built-in cover for the ball's group."""
    if R < 1:
        raise InputError("cover scale R must be positive")
    if isinstance(ball.group, Z2Cayley):
        return brick_cover(ball, R)
    if isinstance(ball.group, F2Cayley):
        return cone_cover(ball, R)
    if isinstance(ball.group, BsCayley):
        return tree_band_cover(ball, R)
    raise InputError(f"no cover construction for {ball.group.name}")


def _diameter(cover: Cover, pts: list) -> tuple[int, bool]:
    group = cover.ball.group
    if isinstance(group, Z2Cayley):
        s = [x + y for x, y in pts]
        d = [x - y for x, y in pts]
        return max(max(s) - min(s), max(d) - min(d)), True
    if isinstance(group, F2Cayley):
        # double sweep is exact for subsets of a tree
        far = max(pts, key=lambda w: _f2_dist(pts[0], w))
        return max(_f2_dist(far, w) for w in pts), True
    # BS: triangle inequality through the first point; exact norm when the quotient is in the ball
    grp = group.grp
    c = pts[0]
    c_inv = bt.inverse(c, grp)
    norms = cover.ball.norms
    radius = 0
    for x in pts:
        q = bt.multiply(c_inv, x, grp)
        radius = max(radius, norms.get(q, norms[c] + norms[x]))
    return (2 * radius if len(pts) > 1 else 0), False


def _f2_dist(u: tuple, v: tuple) -> int:
    k = 0
    for p, q in zip(u, v):
        if p != q:
            break
        k += 1
    return len(u) + len(v) - 2 * k


def cover_stats(cover: Cover) -> CoverStats:
    """ord, R-multiplicity, diameters and Lebesgue bounds, computed on the ball.

    R-balls are enumerated as v b for b in the exact ball B(R), so every
    multiplicity is exact for the finite ball.  The Lebesgue lower bound is
    the largest lambda <= R such that every lambda-ball lies in one cell; the
    upper bound is ||b|| - 1 for the shortest pair (v, v b) sharing no cell.
    """
    ball = cover.ball
    group = ball.group
    member = cover.membership()
    if set(member) != set(ball.norms):
        raise InputError("cover does not cover the ball")
    order = max(len(v) for v in member.values())
    shifts = [(b, k) for b, k in zip(*_ball_list(group, cover.R))]
    mult = 0
    leb_upper = None
    leb_fail = cover.R + 1
    for v in ball.order:
        met = set()
        common = set(member[v])
        by_radius: dict[int, list] = defaultdict(list)
        for b, k in shifts:
            y = group.multiply(v, b)
            cells = member.get(y)
            if cells is None:
                continue
            met.update(cells)
            by_radius[k].append(cells)
        mult = max(mult, len(met))
        for k in sorted(by_radius):
            for cells in by_radius[k]:
                if not set(member[v]) & set(cells):
                    leb_upper = k - 1 if leb_upper is None else min(leb_upper, k - 1)
                common &= set(cells)
            if not common:
                leb_fail = min(leb_fail, k)
                break
    diam, exact = 0, True
    for pts in cover.cells.values():
        d, ex = _diameter(cover, pts)
        diam = max(diam, d)
        exact = exact and ex
    return CoverStats(len(cover.cells), order, mult, diam, exact, min(leb_fail - 1, cover.R), leb_upper, cover.d_bound)


def _ball_list(group, R: int):
    norms, order = bfs(group, R)
    return order, [norms[b] for b in order]


def f2_cone_stats(radius: int, R: int) -> CoverStats:
    """Exact stats of the F2 cone cover of the radius ball, without enumerating it.

    Root-fixing automorphisms of the 4-regular tree preserve levels and
    ancestry, hence the cover; they act transitively on every sphere and on
    the cells of each band.  So one vertex per level gives every R-ball count
    and one cell per band gives every diameter.
    """
    if R < 1 or radius < 0:
        raise InputError("need R >= 1 and radius >= 0")
    f2 = F2Cayley()
    shifts, _ = _ball_list(f2, R)
    D = 2 * R
    mult = 0
    for level in range(radius + 1):
        v = (0,) * level
        met = set()
        for b in shifts:
            y = f2.multiply(v, b)
            if len(y) <= radius:
                met.add(_band_key(len(y), y, R))
        mult = max(mult, len(met))
    diam = 0
    for k in range(radius // D + 1):
        top = min((k + 1) * D - 1, radius)
        anc = max(0, k * D - R)
        # a cell holds all descendants of its apex between levels kD and top; apex has >= 3 child branches
        diam = max(diam, 2 * (top - anc) if top > 0 else 0)
    cells = 1 + sum(4 * 3 ** (max(0, k * D - R) - 1) for k in range(1, radius // D + 1))
    upper = 0 if radius >= D else None
    return CoverStats(cells, 1, mult, diam, True, 0 if radius >= D else R, upper, 10 * R)
