"""One entry point per lab check, shared by the CLI and the acceptance suite."""
from __future__ import annotations

import time

from ..errors import InputError
from .ball import DEFAULT_VERTEX_CAP, F2Cayley, build_ball, parse_group
from .covers import cover_stats, f2_cone_stats, greedy_cover
from .verify import LabReport, verify_partition, verify_projection, verify_separation, verify_tail_bound

CHECKS = ("verify-prop26", "verify-lemma25", "verify-lemma27", "verify-partition", "cover")

# asdim + 1 for the built-in balls: R-multiplicity a good cover should not exceed
EXPECTED_MULTIPLICITY = {"z2": 3, "f2": 2}


def _need(value, name: str, check: str) -> int:
    if value is None:
        raise InputError(f"{check} needs --{name}")
    return value


def run_lab(
    group: str,
    check: str,
    radius: int,
    pad: int = 0,
    R: int | None = None,
    r: int | None = None,
    seed: int = 0,
    sample_cap: int = 200,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> LabReport:
    if check not in CHECKS:
        raise InputError(f"unknown check {check!r}; expected one of {', '.join(CHECKS)}")
    cayley = parse_group(group)
    if check == "cover":
        return _cover(cayley, radius, pad, _need(R, "R", check), vertex_cap)
    ball = build_ball(cayley, radius, pad, vertex_cap)
    if check == "verify-lemma25":
        return verify_projection(ball)
    if check == "verify-lemma27":
        return verify_tail_bound(ball)
    R, r = _need(R, "R", check), _need(r, "r", check)
    if check == "verify-prop26":
        return verify_separation(ball, R, r, sample_cap=sample_cap, seed=seed)
    return verify_partition(ball, R, r)


def _cover(cayley, radius: int, pad: int, R: int, vertex_cap: int) -> LabReport:
    start = time.perf_counter()
    params = {"group": cayley.name, "radius": radius, "pad": pad, "R": R}
    if isinstance(cayley, F2Cayley):
        # the tree ball is far too large to enumerate at useful radii; its stats follow from symmetry
        stats = f2_cone_stats(radius, R)
        params["method"] = "level representatives"
        tested = radius + 1
    else:
        ball = build_ball(cayley, radius, pad, vertex_cap)
        stats = cover_stats(greedy_cover(ball, R))
        params["method"] = "exhaustive"
        params["vertices"] = len(ball)
        tested = len(ball)
    violations = 0
    expected = EXPECTED_MULTIPLICITY.get(cayley.name)
    if expected is not None and stats.r_multiplicity > expected:
        violations += 1
    if stats.d_bound is not None and stats.max_diameter > stats.d_bound:
        violations += 1
    ms = int(round((time.perf_counter() - start) * 1000))
    return LabReport("cover", params, tested, None, violations, ms, extra={"stats": stats.to_dict()})
